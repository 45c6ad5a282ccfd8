fn main() {
    println!("dessin");
}
