macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run();
        }
    };
}

example!(exact_linear_algebra);
example!(lie_superalgebra);
example!(universal_central_extension);
example!(cyclic_homology);
example!(matrix_families);
example!(steinberg);
example!(central_extension_from_cocycle);
example!(directed_limits);
example!(algebra_files);
example!(cohomology_oracle);
