#ifndef HOL_ERRORS_HPP
#define HOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hol {

enum class Err {
    DomainError,
    DivisionByZero,
    ZeroReduction,
    NotIrreducible,
    IrreducibilityInconclusive,
    MixedParents,
    NotARoot,
    ClosureExceedsDegree,
    GeneratorSearchExhausted,
    WrongDegree,
    NotCoprime,
    IndexDivisor,
    NoMatch,
    NotPIntegral,
    MissingPrime,
    WrongField,
    OrphanOrbit,
    HomomorphismViolation,
    OrderCapExceeded,
    MissingSign,
    SchemaViolation,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace hol

#endif
