macro_rules! example_test {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(words_and_counts, "words_and_counts.rs", words_and_counts_runs);
example_test!(number_theory, "number_theory.rs", number_theory_runs);
example_test!(bernoulli_apostol, "bernoulli_apostol.rs", bernoulli_apostol_runs);
example_test!(special_values, "special_values.rs", special_values_runs);
example_test!(dirichlet_series, "dirichlet_series.rs", dirichlet_series_runs);
example_test!(identity_checks, "identity_checks.rs", identity_checks_runs);
example_test!(lambert_eisenstein, "lambert_eisenstein.rs", lambert_eisenstein_runs);
example_test!(audit_report, "audit_report.rs", audit_report_runs);
