#pragma once

#include <stdexcept>
#include <string>

namespace vatom {

struct NonUnitProbability : std::runtime_error {
    explicit NonUnitProbability(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeRadicand : std::runtime_error {
    explicit NegativeRadicand(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDistribution : std::runtime_error {
    explicit InvalidDistribution(const std::string& what) : std::runtime_error(what) {}
};

struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownParameter : std::runtime_error {
    explicit UnknownParameter(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownFigure : std::runtime_error {
    explicit UnknownFigure(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySeries : std::runtime_error {
    explicit EmptySeries(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vatom
