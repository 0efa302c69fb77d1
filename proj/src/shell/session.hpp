#pragma once

#include "hopfcalc/calculus.hpp"
#include "hopfcalc/hadf.hpp"
#include "hopfcalc/shell.hpp"

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcalc::shell {

/// Bad arguments or an input the command cannot run on (exit code 2).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& message, std::optional<SourcePos> pos = std::nullopt)
        : std::runtime_error(message), pos(pos)
    {
    }

    std::optional<SourcePos> pos;
};

/// The parsed input shared by every command: document, algebra, lazily found
/// characters and the seeded generator.
class Session {
public:
    Session(DefinitionDocument doc, std::shared_ptr<const HopfAlgebra> algebra, std::uint64_t seed);

    const DefinitionDocument& doc() const noexcept { return doc_; }
    const HopfAlgebra& algebra() const noexcept { return *algebra_; }
    const std::shared_ptr<const HopfAlgebra>& algebra_ptr() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_->field(); }

    const CharacterSet& characters();
    /// Declared name, "eps" for the counit, otherwise "phi<k>" by list position.
    std::string character_name(const Functional& phi);
    /// Looks up a character by the names character_name hands out.
    const Character& character_named(const std::string& name);

    std::vector<AlgebraElement> ideal_generators(const std::string& name) const;
    /// The universal calculus, or the Woronowicz calculus of a declared ideal.
    Fodc calculus(const std::optional<std::string>& ideal);
    static std::string calculus_label(const std::optional<std::string>& ideal);

    Scalar random_scalar();
    AlgebraElement random_element();

private:
    DefinitionDocument doc_;
    std::shared_ptr<const HopfAlgebra> algebra_;
    std::optional<CharacterSet> characters_;
    std::mt19937_64 rng_;
};

void add_checks(RunReport& report, const std::string& prefix, const CheckList& checks);
void add_check(RunReport& report, const std::string& prefix, CheckResult check);

/// Checks on the found characters: algebra maps, translations that are algebra
/// and comodule maps, and the group laws of the star product.
CheckList translation_group_checks(Session& s);

void run_suite(Session& s, const std::string& suite, RunReport& report);

}  // namespace hopfcalc::shell
