#ifndef ABELIAN_ERRORS_HPP
#define ABELIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abelian {

// Base for all algebraic failures. name() is stable and machine-readable;
// the CLI prints it on the diagnostic stream.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define ABELIAN_DEFINE_ERROR(E)                                           \
    class E : public AlgebraError {                                       \
    public:                                                               \
        explicit E(const std::string& msg) : AlgebraError(#E, msg) {}     \
    }

ABELIAN_DEFINE_ERROR(NonPrimeCharacteristic);
ABELIAN_DEFINE_ERROR(SizeCapExceeded);
ABELIAN_DEFINE_ERROR(DivisionByZero);
ABELIAN_DEFINE_ERROR(FieldMismatch);
ABELIAN_DEFINE_ERROR(SemisimplicityViolation);
ABELIAN_DEFINE_ERROR(OrderUnavailable);
ABELIAN_DEFINE_ERROR(NotCoprime);
ABELIAN_DEFINE_ERROR(NotAUnit);
ABELIAN_DEFINE_ERROR(NotOrbitClosed);
ABELIAN_DEFINE_ERROR(AllZeroAxis);
ABELIAN_DEFINE_ERROR(BudgetExceeded);
ABELIAN_DEFINE_ERROR(ZeroCode);
ABELIAN_DEFINE_ERROR(TrivialDistance);
ABELIAN_DEFINE_ERROR(DesignedDistanceOutOfRange);
ABELIAN_DEFINE_ERROR(LengthMismatch);
ABELIAN_DEFINE_ERROR(NotACodeword);
ABELIAN_DEFINE_ERROR(ParseError);

#undef ABELIAN_DEFINE_ERROR

}  // namespace abelian

#endif
