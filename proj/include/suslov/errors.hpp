#pragma once

#include <stdexcept>
#include <string>

namespace suslov {

// Input/parameter problems: the caller asked for something outside the
// domain of the operation. CLI maps these to exit code 2.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateAxis : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct DegenerateBalance : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct InvalidShape : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct ParityError : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct DegenerateC : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct UnsupportedP : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct ChartSingularity : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct CoincidentSolutions : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct NonResonant : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct EvaluationAtZero : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Runtime numerical failures. CLI maps these to exit code 3.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepSizeUnderflow : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct HorizonTooShort : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct NoConvergence : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct PoleInDenominator : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct ResonantParameters : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct BranchPoint : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct PoleHit : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};
struct DivisionObstruction : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

} // namespace suslov
