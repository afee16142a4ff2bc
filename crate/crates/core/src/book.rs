// Runs the code blocks of the guide as doc-tests.

macro_rules! chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        )*
    };
}

chapters! {
    introduction => "introduction.md",
    polynomials => "polynomials.md",
    gaussian_binomials => "gaussian-binomials.md",
    bressoud => "bressoud.md",
    schur => "schur.md",
    certificate => "certificate.md",
    rogers_ramanujan => "rogers-ramanujan.md",
    oracles => "oracles.md",
    expressions => "expressions.md",
    cli => "cli.md",
}

#[doc = include_str!("../../../README.md")]
mod readme {}
