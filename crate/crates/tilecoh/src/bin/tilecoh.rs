fn main() {
    println!("tilecoh CLI: under construction");
}
