#pragma once

#include <stdexcept>
#include <string>

namespace transonic {

// Base of every solver failure. The stage tag is filled by the orchestrator
// when an error escapes one step of the fixed-point operator.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
    SolverError(const std::string& what, std::string stage)
        : std::runtime_error(what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }
    void set_stage(std::string s) { stage_ = std::move(s); }

private:
    std::string stage_;
};

#define TRANSONIC_ERROR(Name)                                  \
    class Name : public SolverError {                          \
    public:                                                    \
        using SolverError::SolverError;                        \
    }

TRANSONIC_ERROR(VacuumBracket);
TRANSONIC_ERROR(NoBranchRoot);
TRANSONIC_ERROR(SonicDegeneracy);
TRANSONIC_ERROR(NotSupersonic);
TRANSONIC_ERROR(IncompatibleMode);
TRANSONIC_ERROR(MarchBreakdown);
TRANSONIC_ERROR(OutOfDomain);
TRANSONIC_ERROR(DegenerateJ);
TRANSONIC_ERROR(CharacteristicEscape);
TRANSONIC_ERROR(StagnationFloor);
TRANSONIC_ERROR(LinearSolveFailure);
TRANSONIC_ERROR(SolvabilityViolation);
TRANSONIC_ERROR(SuperpositionDegenerate);
TRANSONIC_ERROR(CompatibilityViolation);
TRANSONIC_ERROR(TrustRadiusExceeded);
TRANSONIC_ERROR(NoContraction);
TRANSONIC_ERROR(ConfigError);

#undef TRANSONIC_ERROR

class ExitPressureOutOfRange : public SolverError {
public:
    ExitPressureOutOfRange(const std::string& what, double lo, double hi)
        : SolverError(what), lo_(lo), hi_(hi) {}
    double lower() const { return lo_; }
    double upper() const { return hi_; }

private:
    double lo_, hi_;
};

class ModalSolveFailure : public SolverError {
public:
    ModalSolveFailure(const std::string& what, int k, int l)
        : SolverError(what), k_(k), l_(l) {}
    int k() const { return k_; }
    int l() const { return l_; }

private:
    int k_, l_;
};

}  // namespace transonic
