#pragma once

#include "hopfcalc/check.hpp"

#include <cstddef>
#include <string>

namespace hopfcalc {

/// Collects failing witnesses for one axiom family, keeping the first few.
class WitnessLog {
public:
    explicit WitnessLog(std::string name) : name_(std::move(name)) {}

    void record(const std::string& witness)
    {
        if (count_ < kMaxShown)
            text_ += (count_ ? "; " : "") + witness;
        ++count_;
    }

    CheckResult result() const
    {
        if (count_ == 0)
            return pass(name_);
        std::string w = text_;
        if (count_ > kMaxShown)
            w += "; ... (" + std::to_string(count_) + " failures)";
        return fail(name_, w);
    }

private:
    static constexpr std::size_t kMaxShown = 4;
    std::string name_;
    std::string text_;
    std::size_t count_ = 0;
};

}  // namespace hopfcalc
