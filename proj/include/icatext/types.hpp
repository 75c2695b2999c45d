#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace icatext {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Error categories; the CLI maps them to exit codes (config=2, data=3,
// numeric=4).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ICATEXT_DEFINE_ERROR(Name, Base)            \
    struct Name : Base {                            \
        explicit Name(const std::string& msg)       \
            : Base(std::string(#Name ": ") + msg) {} \
    }

ICATEXT_DEFINE_ERROR(EmptyVocabulary, DataError);
ICATEXT_DEFINE_ERROR(WrongWeighting, ConfigError);
ICATEXT_DEFINE_ERROR(TooFewSamples, DataError);
ICATEXT_DEFINE_ERROR(OrderTooLarge, ConfigError);
ICATEXT_DEFINE_ERROR(NotCentered, NumericError);
ICATEXT_DEFINE_ERROR(DimensionMismatch, ConfigError);
ICATEXT_DEFINE_ERROR(DegenerateSample, NumericError);
ICATEXT_DEFINE_ERROR(SingularW, NumericError);
ICATEXT_DEFINE_ERROR(DegenerateInput, NumericError);
ICATEXT_DEFINE_ERROR(SingleClass, DataError);
ICATEXT_DEFINE_ERROR(NoConvergence, NumericError);
ICATEXT_DEFINE_ERROR(IllConditioned, NumericError);
ICATEXT_DEFINE_ERROR(GridEmpty, ConfigError);
ICATEXT_DEFINE_ERROR(FoldTooSmall, DataError);
ICATEXT_DEFINE_ERROR(EmptyEvaluation, DataError);
ICATEXT_DEFINE_ERROR(IndexOutOfRange, ConfigError);

#undef ICATEXT_DEFINE_ERROR

}  // namespace icatext
