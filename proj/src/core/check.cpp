#include "hopfcalc/check.hpp"

namespace hopfcalc {

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::conditional:
        return "conditional";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

bool CheckList::all_passed() const { return first_failure() == nullptr; }

const CheckResult* CheckList::first_failure() const
{
    for (const auto& c : checks) {
        if (c.failed())
            return &c;
    }
    return nullptr;
}

const CheckResult* CheckList::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name)
            return &c;
    }
    return nullptr;
}

}  // namespace hopfcalc
