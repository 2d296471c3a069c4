#pragma once

#include <stdexcept>
#include <string>

namespace dofic {

struct NonPositiveAntennaCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConditionNotSatisfied : std::domain_error {
  using std::domain_error::domain_error;
};

struct CornerUndefinedForCase : std::domain_error {
  using std::domain_error::domain_error;
};

struct InfeasibleParameters : std::domain_error {
  using std::domain_error::domain_error;
};

struct PartitionInfeasible : std::domain_error {
  using std::domain_error::domain_error;
};

struct CausalityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dofic
