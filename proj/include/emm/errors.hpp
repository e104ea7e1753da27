#pragma once

#include <stdexcept>
#include <string>

namespace emm {

/// Invalid user-facing configuration: bad flag values, inconsistent model
/// parameters, unsupported combinations. Maps to process exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated numerical contract: non-Hermitian input where Hermiticity is
/// required, failed residual checks, non-finite objective values, and other
/// conditions that indicate a broken internal invariant rather than bad
/// user input. Maps to process exit code 3.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitContractError = 3;

} // namespace emm
