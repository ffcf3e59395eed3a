#[allow(dead_code)]
mod bell_diagonal_geometry {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bell_diagonal_geometry.rs"));
}

#[test]
fn bell_diagonal_geometry_runs() {
    bell_diagonal_geometry::run_example().expect("bell_diagonal_geometry example should run");
}

#[allow(dead_code)]
mod channel_evolution {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/channel_evolution.rs"));
}

#[test]
fn channel_evolution_runs() {
    channel_evolution::run_example().expect("channel_evolution example should run");
}

#[allow(dead_code)]
mod phase_damping_relations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/phase_damping_relations.rs"));
}

#[test]
fn phase_damping_relations_runs() {
    phase_damping_relations::run_example().expect("phase_damping_relations example should run");
}

#[allow(dead_code)]
mod depolarizing_relations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/depolarizing_relations.rs"));
}

#[test]
fn depolarizing_relations_runs() {
    depolarizing_relations::run_example().expect("depolarizing_relations example should run");
}

#[allow(dead_code)]
mod trace_entanglement_x_states {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/trace_entanglement_x_states.rs"));
}

#[test]
fn trace_entanglement_x_states_runs() {
    trace_entanglement_x_states::run_example().expect("trace_entanglement_x_states example should run");
}

#[allow(dead_code)]
mod contractivity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/contractivity.rs"));
}

#[test]
fn contractivity_runs() {
    contractivity::run_example().expect("contractivity example should run");
}

#[allow(dead_code)]
mod x_state_dynamics {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/x_state_dynamics.rs"));
}

#[test]
fn x_state_dynamics_runs() {
    x_state_dynamics::run_example().expect("x_state_dynamics example should run");
}

#[allow(dead_code)]
mod verify_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_suite.rs"));
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().expect("verify_suite example should run");
}
