#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semibrace {

using element_t = std::uint32_t;

enum class ErrorKind {
  InvalidTable,
  NotAGroup,
  NotASemigroup,
  NotLeftCancellative,
  CompatibilityViolation,
  InternalInconsistency,
  NotInG,
  EmptyOperand,
  NotASubsemigroup,
  ENotIdeal,
  NotAnIdeal,
  QuotientIllDefined,
  InconsistentEquivalences,
  ConsistencyViolation,
  NotEndomorphism,
  NotIdempotent,
  NotAHomomorphism,
  NotAutomorphism,
  AddNotAGroup,
  NotClosed,
  OrderMismatch,
  CapExceeded,
  UnknownName,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotASemigroup: return "NotASemigroup";
    case ErrorKind::NotLeftCancellative: return "NotLeftCancellative";
    case ErrorKind::CompatibilityViolation: return "CompatibilityViolation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotInG: return "NotInG";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::NotASubsemigroup: return "NotASubsemigroup";
    case ErrorKind::ENotIdeal: return "ENotIdeal";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::QuotientIllDefined: return "QuotientIllDefined";
    case ErrorKind::InconsistentEquivalences: return "InconsistentEquivalences";
    case ErrorKind::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::AddNotAGroup: return "AddNotAGroup";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

// Every failure raised by the library. The witness lists the elements that
// instantiate the failure (e.g. a, b, c for a compatibility violation) in
// the labelling of the input that was being checked.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, std::vector<element_t> witness = {})
      : std::runtime_error(format(kind, detail, witness)),
        kind_(kind),
        detail_(std::move(detail)),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string const& detail() const noexcept { return detail_; }
  std::vector<element_t> const& witness() const noexcept { return witness_; }

 private:
  static std::string format(ErrorKind kind,
                            std::string const& detail,
                            std::vector<element_t> const& witness) {
    std::ostringstream out;
    out << to_string(kind);
    if (!detail.empty()) {
      out << ": " << detail;
    }
    if (!witness.empty()) {
      out << " [witness";
      for (auto w : witness) {
        out << ' ' << w;
      }
      out << ']';
    }
    return out.str();
  }

  ErrorKind kind_;
  std::string detail_;
  std::vector<element_t> witness_;
};

}  // namespace semibrace
