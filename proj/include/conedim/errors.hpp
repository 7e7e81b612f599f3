#pragma once

#include <stdexcept>
#include <string>

namespace conedim {

// Domain errors carry a stable name (used verbatim in CLI reports and exit
// status) plus a human-readable detail string.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define CONEDIM_ERROR(NAME)                                                  \
    class NAME : public DomainError {                                        \
    public:                                                                  \
        explicit NAME(const std::string& detail) : DomainError(#NAME, detail) {} \
    }

CONEDIM_ERROR(DimensionMismatch);
CONEDIM_ERROR(JacobiViolation);
CONEDIM_ERROR(NotAnIdeal);
CONEDIM_ERROR(RegularElementNotFound);
CONEDIM_ERROR(NotTypeR);
CONEDIM_ERROR(AnnotationRequired);
CONEDIM_ERROR(NotUnipotent);
CONEDIM_ERROR(SingularDiagonal);
CONEDIM_ERROR(NotCompactlyGenerated);
CONEDIM_ERROR(ParseError);
CONEDIM_ERROR(NonInvertibleAction);
CONEDIM_ERROR(BudgetExceeded);
CONEDIM_ERROR(EmptyCurve);
CONEDIM_ERROR(DegenerateSample);
CONEDIM_ERROR(MetricViolation);
CONEDIM_ERROR(NotUltrametric);
CONEDIM_ERROR(HypothesisFailure);
CONEDIM_ERROR(FactorizationBudget);
CONEDIM_ERROR(UnsupportedInput);

#undef CONEDIM_ERROR

} // namespace conedim
