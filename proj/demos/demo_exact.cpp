// Usage example: build an effective Hamiltonian and compute its exact
// ground energy by dense diagonalization.
#include <cstdio>

#include <emm/emm.hpp>

int main() {
  emm::ModelSpec spec;
  spec.group = emm::Group::SU2;
  spec.scenario = emm::Scenario::Vacuum;
  spec.n_f = 1;
  spec.L = 1.0;
  spec.V = 1.0;
  spec.lmax = 1000;

  emm::TruncationConfig trunc;
  trunc.levels = 16;

  const emm::ModelHamiltonian ham = emm::build_hamiltonian(spec, trunc);
  const emm::GroundState gs = emm::ground_state(ham.op);

  std::printf("qubits        : %d\n", ham.n_qubits);
  std::printf("matrix dim    : %d\n", static_cast<int>(ham.op.rows()));
  std::printf("ground energy : %.12f\n", gs.energy);

  // Sample the effective potential on a short grid.
  std::printf("\nphi, V(phi)\n");
  for (int i = 0; i <= 8; ++i) {
    const double phi = i * emm::kPi / 2.0;
    std::printf("%.6f, %.9f\n", phi, emm::su2_potential(phi, spec));
  }
  return 0;
}
