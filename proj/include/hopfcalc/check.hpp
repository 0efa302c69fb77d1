#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcalc {

enum class CheckStatus { pass, fail, conditional, skipped };

std::string to_string(CheckStatus status);

/// One named verification outcome; failures carry a concrete witness.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string witness;

    bool passed() const { return status == CheckStatus::pass; }
    bool failed() const { return status == CheckStatus::fail; }
};

inline CheckResult pass(std::string name) { return {std::move(name), CheckStatus::pass, {}}; }
inline CheckResult fail(std::string name, std::string witness)
{
    return {std::move(name), CheckStatus::fail, std::move(witness)};
}

struct CheckList {
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void append(const CheckList& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    bool all_passed() const;
    /// nullptr when no check failed.
    const CheckResult* first_failure() const;
    const CheckResult* find(const std::string& name) const;
};

/// A construction invariant that should be impossible to violate was violated.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hopfcalc
