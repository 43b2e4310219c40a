macro_rules! example {
    ($m:ident, $file:literal, $test:ident) => {
        mod $m {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $m::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(precubical_grid, "precubical_grid.rs", precubical_grid_runs);
example!(free_omega_cells, "free_omega_cells.rs", free_omega_cells_runs);
example!(realize_paths, "realize_paths.rs", realize_paths_runs);
example!(globe, "globe.rs", globe_runs);
example!(nerves, "nerves.rs", nerves_runs);
example!(smith_homology, "smith_homology.rs", smith_homology_runs);
example!(t_deformation, "t_deformation.rs", t_deformation_runs);
example!(pv_deadlock, "pv_deadlock.rs", pv_deadlock_runs);
example!(pv_render, "pv_render.rs", pv_render_runs);
