// Usage example: decompose a small Hamiltonian into Pauli strings and
// minimize the energy with the bundled variational solver.
#include <cstdio>

#include <emm/emm.hpp>

int main() {
  emm::ModelSpec spec;
  spec.group = emm::Group::SU2;
  spec.scenario = emm::Scenario::Vacuum;

  emm::TruncationConfig trunc;
  trunc.levels = 4;  // two qubits: fast enough for a demo run

  const emm::ModelHamiltonian ham = emm::build_hamiltonian(spec, trunc);
  const double exact = emm::ground_energy(ham.op);

  const emm::PauliSum sum = emm::decompose(ham.op, 1e-10);
  std::printf("pauli terms   : %zu\n", sum.terms.size());

  emm::AnsatzSpec ansatz;
  ansatz.n_qubits = ham.n_qubits;
  ansatz.depth = 3;
  ansatz.entanglement = emm::Entanglement::Full;

  const emm::VqeResult res =
      emm::run_vqe(ham, ansatz, /*restarts=*/4, /*seed=*/11,
                   /*max_iterations=*/400, exact);

  std::printf("exact energy  : %.9f\n", exact);
  std::printf("vqe energy    : %.9f\n", res.best_energy);
  std::printf("gap           : %.3e\n", res.best_energy - exact);
  std::printf("evaluations   : %zu\n", res.trace.size());
  return 0;
}
