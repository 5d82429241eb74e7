//! Every example runs to completion; each asserts its own claims.

mod command_line_jobs {
    include!("../examples/command_line_jobs.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod differential_reduction {
    include!("../examples/differential_reduction.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod dlog_system {
    include!("../examples/dlog_system.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod eps_expansion {
    include!("../examples/eps_expansion.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod exceptional_parameters {
    include!("../examples/exceptional_parameters.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod goncharov_polylogs {
    include!("../examples/goncharov_polylogs.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod half_integer_gauss {
    include!("../examples/half_integer_gauss.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod hypergeometric_series {
    include!("../examples/hypergeometric_series.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod input_grammar {
    include!("../examples/input_grammar.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod master_integral_counts {
    include!("../examples/master_integral_counts.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod mellin_barnes_closure {
    include!("../examples/mellin_barnes_closure.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod parametrization_conditions {
    include!("../examples/parametrization_conditions.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod path_independence {
    include!("../examples/path_independence.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod self_check_suite {
    include!("../examples/self_check_suite.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod sunset_normalization {
    include!("../examples/sunset_normalization.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod symbolic_expansion {
    include!("../examples/symbolic_expansion.rs");

    #[test]
    fn runs() {
        main();
    }
}
