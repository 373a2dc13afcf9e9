#pragma once

#include <stdexcept>
#include <string>

namespace hnilm {

enum class errc {
    empty_input,
    invalid_sample,
    incompatible_period,
    no_overlap,
    too_short,
    no_data,
    no_on_state,
    too_many_combinations,
    zero_energy,
    missing_truth,
    undefined_correlation,
    unknown_node,
    invalid_spec,
    parse_error,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_input: return "EmptyInput";
    case errc::invalid_sample: return "InvalidSample";
    case errc::incompatible_period: return "IncompatiblePeriod";
    case errc::no_overlap: return "NoOverlap";
    case errc::too_short: return "TooShort";
    case errc::no_data: return "NoData";
    case errc::no_on_state: return "NoOnState";
    case errc::too_many_combinations: return "TooManyCombinations";
    case errc::zero_energy: return "ZeroEnergy";
    case errc::missing_truth: return "MissingTruth";
    case errc::undefined_correlation: return "UndefinedCorrelation";
    case errc::unknown_node: return "UnknownNode";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hnilm
