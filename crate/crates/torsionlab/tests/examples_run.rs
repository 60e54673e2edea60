//! The examples are the primary interface of the crate; keep every one of
//! them compiling and running.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(exact_linalg);
example!(ring_families);
example!(torsion_certificates);
example!(koszul_homology);
example!(cech_cohomology);
example!(weak_proregularity);
example!(corpus_report);
