#pragma once

#include "emm/errors.hpp"
#include "emm/format.hpp"
#include "emm/model_spec.hpp"
#include "emm/oscillator.hpp"
#include "emm/potentials.hpp"
#include "emm/hamiltonian.hpp"
#include "emm/pauli.hpp"
#include "emm/vqe.hpp"
#include "emm/run_record.hpp"
