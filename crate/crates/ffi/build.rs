fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets manifest dir");
    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("QUIVER_MODULI_H".to_string()),
        cpp_compat: true,
        documentation: true,
        enumeration: cbindgen::EnumConfig {
            prefix_with_name: true,
            ..Default::default()
        },
        ..Default::default()
    };
    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(format!("{crate_dir}/include/quiver_moduli.h"));
        }
        // Keep the checked-in header when generation is unavailable.
        Err(err) => println!("cargo:warning=skipping header generation: {err}"),
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
