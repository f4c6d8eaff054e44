macro_rules! example {
    ($name:ident) => {
        mod $name {
            #![allow(dead_code)]
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run().unwrap();
            }
        }
    };
}

example!(laurent_arithmetic);
example!(magnus_representation);
example!(alpha_automorphism);
example!(fixed_point_certificate);
example!(brute_force_oracle);
example!(lie_derivation_kernel);
