#pragma once

#include <stdexcept>
#include <string>

namespace chowforge {

enum class ErrorKind {
  MalformedSpec,
  EmptyGroundSet,
  ElementOutOfRange,
  AllLoops,
  RankZero,
  NotSimple,
  NotAFlat,
  NotComparable,
  NotALattice,
  OrderNotTotal,
  NotACoatomOfF,
  NotAHyperplane,
  CutoffTooSmall,
  NotArtinianWithinCutoff,
  InhomogeneousGenerator,
  CutoffExceeded,
  CoveringConditionViolated,
  ZeroIdeal,
  ClosedFormInapplicable,
  BudgetExceeded,
  NotAtomic,
  NotABuildingSet,
  Usage,
};

const char* to_string(ErrorKind k);

/// Every library failure is raised as this, tagged with a kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::EmptyGroundSet: return "EmptyGroundSet";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::AllLoops: return "AllLoops";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotAFlat: return "NotAFlat";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::OrderNotTotal: return "OrderNotTotal";
    case ErrorKind::NotACoatomOfF: return "NotACoatomOfF";
    case ErrorKind::NotAHyperplane: return "NotAHyperplane";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::NotArtinianWithinCutoff: return "NotArtinianWithinCutoff";
    case ErrorKind::InhomogeneousGenerator: return "InhomogeneousGenerator";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::CoveringConditionViolated: return "CoveringConditionViolated";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::ClosedFormInapplicable: return "ClosedFormInapplicable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::NotABuildingSet: return "NotABuildingSet";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace chowforge
