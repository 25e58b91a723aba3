// Temporary fixture generator (removed once fixtures are frozen).
use num::rational::BigRational;
use tilecoh::algebra::{NumberField, ZPoly};
use tilecoh::format;
use tilecoh::geom::{Point, Polygon, RigidMotion, Rotor};
use tilecoh::tiling::{ProtoTile, SubstitutionRule, TilingSystem};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn chair() -> TilingSystem {
    let k = NumberField::rationals();
    let pt = |x: i64, y: i64| Point::new(k.from_int(x), k.from_int(y));
    let l_tile = ProtoTile {
        id: "L".into(),
        polygon: Polygon::new(vec![
            pt(0, 0),
            pt(2, 0),
            pt(2, 1),
            pt(1, 1),
            pt(1, 2),
            pt(0, 2),
        ]),
        edge_labels: vec![
            "long".into(),
            "short".into(),
            "short".into(),
            "short".into(),
            "short".into(),
            "long".into(),
        ],
    };
    let rot = |c: i64, s: i64| Rotor::new(k.from_int(c), k.from_int(s));
    let placements = vec![vec![
        (0, RigidMotion::new(rot(1, 0), pt(0, 0))),
        (0, RigidMotion::new(rot(1, 0), pt(1, 1))),
        (0, RigidMotion::new(rot(0, 1), pt(4, 0))),
        (0, RigidMotion::new(rot(0, -1), pt(0, 4))),
    ]];
    TilingSystem {
        name: "chair".into(),
        field: k.clone(),
        prototiles: vec![l_tile],
        rule: SubstitutionRule {
            linear_factor: k.from_int(2),
            placements,
        },
    }
}

fn pinwheel_family(name: &str, m: i64, n: i64) -> TilingSystem {
    // right triangle with legs n (x-axis) and m; inflation by sqrt(m^2+n^2)
    let nn = m * m + n * n;
    let k = NumberField::new(
        ZPoly::new(vec![(-nn).into(), 0.into(), 1.into()]),
        q(3, 1).min(q(2, 1)),
        q(4, 1).max(q(5, 2)),
    )
    .unwrap();
    // interval: sqrt(5) in [2, 5/2], sqrt(13) in [3, 4]
    let k = if nn == 5 {
        NumberField::new(ZPoly::from_i64(&[-5, 0, 1]), q(2, 1), q(5, 2)).unwrap()
    } else {
        NumberField::new(ZPoly::from_i64(&[-13, 0, 1]), q(3, 1), q(4, 1)).unwrap()
    };
    let s = k.generator(); // sqrt(nn)
    let e = |r: BigRational, rs: BigRational| {
        // r + rs * s
        k.element(vec![r, rs])
    };
    let pt = |x: (i64, i64, i64, i64), y: (i64, i64, i64, i64)| {
        Point::new(e(q(x.0, x.1), q(x.2, x.3)), e(q(y.0, y.1), q(y.2, y.3)))
    };
    let t_plus = ProtoTile {
        id: "T+".into(),
        polygon: Polygon::new(vec![
            pt((0, 1, 0, 1), (0, 1, 0, 1)),
            pt((n, 1, 0, 1), (0, 1, 0, 1)),
            pt((n, 1, 0, 1), (m, 1, 0, 1)),
        ]),
        edge_labels: vec!["legN".into(), "legM".into(), "hyp".into()],
    };
    let t_minus = ProtoTile {
        id: "T-".into(),
        polygon: Polygon::new(vec![
            pt((0, 1, 0, 1), (0, 1, 0, 1)),
            pt((n, 1, 0, 1), (-m, 1, 0, 1)),
            pt((n, 1, 0, 1), (0, 1, 0, 1)),
        ]),
        edge_labels: vec!["hyp".into(), "legM".into(), "legN".into()],
    };
    // rotors: alpha = atan(m/n): (n/s, m/s) = (n*s/nn, m*s/nn)
    let rot_alpha = Rotor::new(e(q(0, 1), q(n, nn)), e(q(0, 1), q(m, nn)));
    let rot_90a = Rotor::new(e(q(0, 1), q(-m, nn)), e(q(0, 1), q(n, nn)));
    let rot_180a = Rotor::new(e(q(0, 1), q(-n, nn)), e(q(0, 1), q(-m, nn)));
    let rot_negb = Rotor::new(e(q(0, 1), q(m, nn)), e(q(0, 1), q(-n, nn)));
    let tr = |xs: BigRational, ys: BigRational| Point::new(e(q(0, 1), xs), e(q(0, 1), ys));
    // placements for T+ in the frame s * T+
    let phi_plus: Vec<(usize, RigidMotion)> = if nn == 5 {
        vec![
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(0, 1), q(0, 1)))),
            (1, RigidMotion::new(rot_90a.clone(), tr(q(2, 1), q(0, 1)))),
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(1, 1), q(0, 1)))),
            (0, RigidMotion::new(rot_alpha.clone(), tr(q(1, 1), q(0, 1)))),
            (0, RigidMotion::new(rot_180a.clone(), tr(q(8, 5), q(4, 5)))),
        ]
    } else {
        // (2,3): s = sqrt13; positions in multiples of 1/s i.e. rational * s
        vec![
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(0, 1), q(0, 1)))),
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(1, 1), q(0, 1)))),
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(2, 1), q(0, 1)))),
            (1, RigidMotion::new(rot_90a.clone(), tr(q(3, 1), q(0, 1)))),
            (1, RigidMotion::new(rot_90a.clone(), tr(q(3, 1), q(1, 1)))),
            (1, RigidMotion::new(rot_180a.clone(), tr(q(22, 13), q(6, 13)))),
            (1, RigidMotion::new(rot_180a.clone(), tr(q(35, 13), q(6, 13)))),
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(9, 13), q(6, 13)))),
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(22, 13), q(6, 13)))),
            (1, RigidMotion::new(rot_180a.clone(), tr(q(31, 13), q(12, 13)))),
            (1, RigidMotion::new(rot_alpha.clone(), tr(q(18, 13), q(12, 13)))),
            (0, RigidMotion::new(rot_90a.clone(), tr(q(3, 1), q(1, 1)))),
            (0, RigidMotion::new(rot_negb.clone(), tr(q(27, 13), q(18, 13)))),
        ]
    };
    // T- placements: conjugate everything, swap types
    let conj_motion = |mo: &RigidMotion| RigidMotion {
        rot: mo.rot.conj(),
        reflect: false,
        tr: mo.tr.conj(),
    };
    let phi_minus: Vec<(usize, RigidMotion)> = phi_plus
        .iter()
        .map(|(c, mo)| (1 - c, conj_motion(mo)))
        .collect();
    TilingSystem {
        name: name.into(),
        field: k.clone(),
        prototiles: vec![t_plus, t_minus],
        rule: SubstitutionRule {
            linear_factor: k.element(vec![q(0, 1), q(1, 1)]),
            placements: vec![phi_plus, phi_minus],
        },
    }
}

fn penrose() -> TilingSystem {
    // gamma = 2 cos(pi/10), min poly x^4 - 5x^2 + 5
    let k = NumberField::new(ZPoly::from_i64(&[5, 0, -5, 0, 1]), q(15, 8), q(2, 1)).unwrap();
    let e = |v: [BigRational; 4]| k.element(v.to_vec());
    let z = || q(0, 1);
    let cos36 = || e([q(-1, 1), z(), q(1, 2), z()]);
    let sin36 = || e([z(), q(-3, 2), z(), q(1, 2)]);
    let tau = || e([q(-2, 1), z(), q(1, 1), z()]);
    let tau2 = || e([q(-1, 1), z(), q(1, 1), z()]);
    let tau_c = || e([q(-1, 2), z(), q(1, 2), z()]);
    let tau_s = || e([z(), q(1, 2), z(), z()]);
    let cos72 = || e([q(-3, 2), z(), q(1, 2), z()]);
    let sin72 = || e([z(), q(1, 2), z(), z()]);
    let one = || k.one();
    let zero = || k.zero();

    let a_plus = ProtoTile {
        id: "a+".into(),
        polygon: Polygon::new(vec![
            Point::new(zero(), zero()),
            Point::new(one(), zero()),
            Point::new(cos36(), sin36()),
        ]),
        edge_labels: vec!["r1".into(), "d".into(), "r2".into()],
    };
    let a_minus = ProtoTile {
        id: "a-".into(),
        polygon: Polygon::new(vec![
            Point::new(zero(), zero()),
            Point::new(cos36(), sin36().neg()),
            Point::new(one(), zero()),
        ]),
        edge_labels: vec!["r2".into(), "d".into(), "r1".into()],
    };
    let o_plus = ProtoTile {
        id: "o+".into(),
        polygon: Polygon::new(vec![
            Point::new(zero(), zero()),
            Point::new(tau(), zero()),
            Point::new(cos36(), sin36()),
        ]),
        edge_labels: vec!["diag".into(), "r3".into(), "r4".into()],
    };
    let o_minus = ProtoTile {
        id: "o-".into(),
        polygon: Polygon::new(vec![
            Point::new(zero(), zero()),
            Point::new(cos36(), sin36().neg()),
            Point::new(tau(), zero()),
        ]),
        edge_labels: vec!["r4".into(), "r3".into(), "diag".into()],
    };
    // indices: 0 = a+, 1 = a-, 2 = o+, 3 = o-
    let rot216 = Rotor::new(cos36().neg(), sin36().neg());
    let rot144 = Rotor::new(cos36().neg(), sin36());
    let rot252 = Rotor::new(cos72().neg(), sin72().neg());
    let rot108 = Rotor::new(cos72().neg(), sin72());
    let rot180 = Rotor::new(one().neg(), zero());
    let p_apex = Point::new(tau_c(), tau_s());
    let p_apex_c = Point::new(tau_c(), tau_s().neg());
    let p_tau = Point::new(tau(), zero());
    let p_tau2 = Point::new(tau2(), zero());
    let phi_a_plus = vec![
        (2, RigidMotion::new(rot216.clone(), p_apex.clone())),
        (0, RigidMotion::new(rot252.clone(), p_apex.clone())),
    ];
    let phi_a_minus = vec![
        (3, RigidMotion::new(rot144.clone(), p_apex_c.clone())),
        (1, RigidMotion::new(rot108.clone(), p_apex_c.clone())),
    ];
    let phi_o_plus = vec![
        (2, RigidMotion::new(rot144.clone(), p_tau2.clone())),
        (3, RigidMotion::new(rot180.clone(), p_tau.clone())),
        (1, RigidMotion::new(rot144.clone(), p_tau.clone())),
    ];
    let phi_o_minus = vec![
        (3, RigidMotion::new(rot216.clone(), p_tau2.clone())),
        (2, RigidMotion::new(rot180.clone(), p_tau.clone())),
        (0, RigidMotion::new(rot216.clone(), p_tau.clone())),
    ];
    TilingSystem {
        name: "penrose_triangles".into(),
        field: k.clone(),
        prototiles: vec![a_plus, a_minus, o_plus, o_minus],
        rule: SubstitutionRule {
            linear_factor: tau(),
            placements: vec![phi_a_plus, phi_a_minus, phi_o_plus, phi_o_minus],
        },
    }
}

fn main() {
    let out = std::path::Path::new("crates/tilecoh/fixtures");
    for sys in [
        chair(),
        penrose(),
        pinwheel_family("pinwheel", 1, 2),
        pinwheel_family("pinwheel_2_3", 2, 3),
    ] {
        // sanity: the inflation must tile the scaled prototiles exactly
        for t in 0..sys.prototiles.len() {
            let patch = sys.supertile(t, 1);
            let region = sys.prototiles[t].polygon.scale(&sys.rule.linear_factor);
            let area: tilecoh::algebra::FieldElement = patch
                .tiles
                .iter()
                .fold(sys.field.zero(), |acc, pt| {
                    acc.add(&sys.prototiles[pt.proto].polygon.area())
                });
            assert!(
                area.sub(&region.area()).is_zero(),
                "{}: tile {} area mismatch",
                sys.name,
                t
            );
            match tilecoh::tiling::validate_cover(&sys.prototiles, &patch, &region) {
                Ok(()) => {}
                Err(v) => println!(
                    "note: {}: phi({}) not edge-to-edge yet: {}",
                    sys.name, sys.prototiles[t].id, v
                ),
            }
        }
        let text = format::serialize_system(&sys);
        let path = out.join(format!("{}.tsys.json", sys.name));
        std::fs::write(&path, text).unwrap();
        println!("wrote {}", path.display());
    }
}
