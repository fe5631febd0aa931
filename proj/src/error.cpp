#include "eqalg/error.hpp"

namespace eqalg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::IsotropyNotInFamily: return "IsotropyNotInFamily";
    case ErrorCode::ObjectMismatch: return "ObjectMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::FunctorNotAdditive: return "FunctorNotAdditive";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::FiniteOrder: return "FiniteOrder";
    case ErrorCode::NotNormalised: return "NotNormalised";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace eqalg
