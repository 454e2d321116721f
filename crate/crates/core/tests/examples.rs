#![allow(dead_code)]

mod heaps_and_retracts {
    include!("../examples/heaps_and_retracts.rs");

    #[test]
    fn every_basepoint_round_trips() {
        let out = run_example().unwrap();
        assert_eq!(out.matches("= H true, G(H; e) = D3 up to iso true").count(), 6);
        assert!(out.contains(r#"["{0,2}", "{1,3}"]"#));
    }
}

mod free_words {
    include!("../examples/free_words.rs");

    #[test]
    fn reductions() {
        let out = run_example().unwrap();
        assert!(out.lines().next().unwrap().contains("free: a "));
        assert!(out.contains("-> a b c a c\n"));
        assert!(out.contains(r#"{"a": 2, "c": -1}"#));
        assert!(out.contains(": pass"));
    }
}

mod direct_sums {
    include!("../examples/direct_sums.rs");

    #[test]
    fn canonical_forms() {
        let out = run_example().unwrap();
        assert!(out.contains("12 elements"));
        assert!(out.contains("H(Z^2): pass"));
    }
}

mod truss_extensions {
    include!("../examples/truss_extensions.rs");

    #[test]
    fn closed_forms_agree() {
        let out = run_example().unwrap();
        assert_eq!(out.matches("closed-form products: pass").count(), 4);
        assert!(!out.contains("fail"));
    }
}

mod dorroh {
    include!("../examples/dorroh.rs");

    #[test]
    fn dorroh_extensions() {
        let out = run_example().unwrap();
        assert!(out.starts_with("(2 + 1) * (3 + -2) = 5 + -2   closed form: 5 + -2"));
        assert_eq!(out.matches(": pass").count(), 4);
    }
}

mod free_modules {
    include!("../examples/free_modules.rs");

    #[test]
    fn free_module_walkthrough() {
        let out = run_example().unwrap();
        assert!(out.contains("[x1, 2x1, x2] = (2, 1; 1)"));
        assert!(out.contains("2.[x1, 2x1, x2] = (1, 2; 1)"));
        assert!(out.contains("sends it to 1\n"));
        assert!(out.contains("T(Z2) free over T(Z2): true"));
        assert!(out.contains("T(Z2^2) free over T(Z2): false"));
    }
}

mod absorbers_adjunction {
    include!("../examples/absorbers_adjunction.rs");

    #[test]
    fn absorbers_and_adjunction() {
        let out = run_example().unwrap();
        assert!(out.contains("trivial action: 2 absorbers, ring module: false"));
        assert!(out.contains("T(Z2^2): 1 absorber, ring module: true"));
        assert_eq!(out.matches("|N| = 2: pass").count(), 3);
        assert!(out.contains("ring module: false, absorbers Some((-1, 0))"));
    }
}
