#include "hopfcalc/fields.hpp"
#include "hopfcalc/shell.hpp"

#include "shell/session.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

namespace hopfcalc {

std::size_t RunReport::count(CheckStatus status) const
{
    std::size_t k = 0;
    for (const auto& c : checks.checks)
        if (c.status == status)
            ++k;
    return k;
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Field parse_field_override(std::string_view text)
{
    const std::string_view prefix = "gf:";
    if (text.substr(0, prefix.size()) != prefix)
        throw std::invalid_argument("field override must look like gf:<p>, got '" + std::string(text) + "'");
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.size() > 19 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("field override must look like gf:<p>, got '" + std::string(text) + "'");
    try {
        return Field::prime(std::stoull(digits));
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + digits + "' is not a prime below 2^61");
    }
}

namespace shell {
namespace {

using Command = std::function<void(Session&, const RunOptions&, RunReport&)>;

void put(RunReport& r, const std::string& key, ResultValue value) { r.result.emplace_back(key, std::move(value)); }
std::int64_t count(std::size_t k) { return static_cast<std::int64_t>(k); }

std::vector<std::string> describe_all(const HopfAlgebra& h, const std::vector<AlgebraElement>& v)
{
    std::vector<std::string> out;
    for (const auto& a : v)
        out.push_back(h.describe(a));
    return out;
}

std::vector<std::string> functionals_text(const std::vector<Functional>& v)
{
    std::vector<std::string> out;
    for (const auto& f : v)
        out.push_back(to_string(f));
    return out;
}

void cmd_validate(Session& s, const RunOptions&, RunReport& r)
{
    const CheckList checks = validate_hopf(s.algebra());
    add_checks(r, "", checks);
    put(r, "dim", count(s.algebra().dim()));
    put(r, "basis", s.algebra().basis_names());
    put(r, "hopf", checks.all_passed());
}

void cmd_universal(Session& s, const RunOptions&, RunReport& r)
{
    const Fodc f = universal_fodc(s.algebra_ptr());
    const std::size_t n = s.algebra().dim();
    add_checks(r, "", check_fodc(f));
    add_check(r, "", f.omega_dim() == n * n - n
                         ? pass("omega_dim = n^2 - n")
                         : fail("omega_dim = n^2 - n", std::to_string(f.omega_dim()) + " != " +
                                                           std::to_string(n * n - n)));
    put(r, "calculus", std::string("universal"));
    put(r, "omega_dim", count(f.omega_dim()));
    put(r, "covariant", f.is_covariant());
}

void cmd_woronowicz(Session& s, const RunOptions& o, RunReport& r)
{
    if (!o.ideal)
        throw InputError("woronowicz needs --ideal NAME");
    const Fodc f = s.calculus(o.ideal);
    add_checks(r, "", check_fodc(f));
    const Subspace closure = right_ideal_closure(s.algebra(), s.ideal_generators(*o.ideal));
    const Subspace recovered = ideal_from_fodc(f);
    add_check(r, "", recovered == closure ? pass("ideal_from_fodc recovers the right-ideal closure")
                                          : fail("ideal_from_fodc recovers the right-ideal closure",
                                                 "dimensions " + std::to_string(recovered.dim()) + " and " +
                                                     std::to_string(closure.dim())));
    put(r, "calculus", Session::calculus_label(o.ideal));
    put(r, "ideal_dim", count(closure.dim()));
    put(r, "omega_dim", count(f.omega_dim()));
    put(r, "invariant_forms", count(invariant_forms(f).dim()));
    put(r, "covariant", f.is_covariant());
}

void cmd_quantum_lie(Session& s, const RunOptions& o, RunReport& r)
{
    const Fodc f = s.calculus(o.ideal);
    put(r, "calculus", Session::calculus_label(o.ideal));
    QuantumLieAlgebra q;
    try {
        q = quantum_lie(f);
    } catch (const ConsistencyError& e) {
        add_check(r, "", fail("quantum Lie algebra", e.what()));
        return;
    }
    const HopfAlgebra& h = s.algebra();
    add_check(r, "", check_reconstruction(f, q));
    add_check(r, "", check_schmudgen(h, q));
    add_check(r, "", check_structure_functionals(h, q));
    const std::size_t ker_eps = h.dim() - 1;
    const std::string name = "dim chi = dim Ker(eps) - dim R";
    add_check(r, "", q.dim() + q.ideal.dim() == ker_eps
                         ? pass(name)
                         : fail(name, std::to_string(q.dim()) + " + " + std::to_string(q.ideal.dim()) +
                                          " != " + std::to_string(ker_eps)));
    put(r, "dim", count(q.dim()));
    put(r, "ideal_dim", count(q.ideal.dim()));
    put(r, "basis", functionals_text(q.basis));
    put(r, "duals", describe_all(h, q.duals));
    put(r, "structure", q.structure.has_value());
    if (!q.structure_note.empty())
        put(r, "structure_note", q.structure_note);
}

void cmd_characters(Session& s, const RunOptions&, RunReport& r)
{
    const CharacterSet& cs = s.characters();
    add_checks(r, "", translation_group_checks(s));
    std::vector<std::string> names;
    std::vector<std::string> values;
    for (const auto& c : cs.characters) {
        names.push_back(s.character_name(c.functional));
        values.push_back(names.back() + " = " + to_string(c.functional));
    }
    put(r, "count", count(cs.characters.size()));
    put(r, "complete", cs.complete);
    if (!cs.complete)
        put(r, "note", cs.note);
    put(r, "separating", separates_points(s.algebra(), cs));
    put(r, "characters", values);
}

std::optional<CartanPair> build_pair(const Fodc& f, RunReport& r)
{
    try {
        return vector_fields_basis(f);
    } catch (const ConsistencyError& e) {
        add_check(r, "", fail("Cartan pair", e.what()));
        return std::nullopt;
    }
}

void cmd_vfields(Session& s, const RunOptions& o, RunReport& r)
{
    const Fodc f = s.calculus(o.ideal);
    put(r, "calculus", Session::calculus_label(o.ideal));
    const auto pair = build_pair(f, r);
    if (!pair)
        return;
    add_checks(r, "", pair->check());
    std::vector<std::string> fields;
    for (const auto& x : pair->fields())
        fields.push_back(pair->describe(x));
    put(r, "omega_dim", count(f.omega_dim()));
    put(r, "dim", count(pair->dim()));
    put(r, "relations", count(pair->relations().size()));
    put(r, "fields", fields);
    const QuantumLieAlgebra q = quantum_lie(f);
    const FieldsSpanReport span = general_fields_span(*pair, q);
    add_check(r, "", span.equal ? pass("H-span of invariant fields is the whole field space")
                                : fail("H-span of invariant fields is the whole field space",
                                       std::to_string(span.span_dim) + " of " + std::to_string(span.field_dim)));
    add_check(r, "", span.leibniz);
    put(r, "invariant_fields", count(span.invariant_count));
    put(r, "span_dim", count(span.span_dim));
}

std::string coderivation_label(Session& s, const CartanPair& pair, std::size_t k, const Coderivation& c)
{
    return "C" + std::to_string(k) + " [" + s.character_name(c.witness.functional) + "] " + pair.describe(c.field);
}

void cmd_coderivations(Session& s, const RunOptions& o, RunReport& r)
{
    const Fodc f = s.calculus(o.ideal);
    put(r, "calculus", Session::calculus_label(o.ideal));
    const auto pair = build_pair(f, r);
    if (!pair)
        return;
    const CharacterSet& cs = s.characters();
    const auto cods = discover_coderivations(*pair, cs);
    std::vector<std::string> listed;
    std::size_t nontrivial = 0;
    for (std::size_t k = 0; k < cods.size(); ++k) {
        add_checks(r, "C" + std::to_string(k), check_coderivation(*pair, cods[k], cs));
        listed.push_back(coderivation_label(s, *pair, k, cods[k]));
        if (cods[k].witness.functional != s.algebra().counit())
            ++nontrivial;
    }
    put(r, "count", count(cods.size()));
    put(r, "non_identity_witness", count(nontrivial));
    put(r, "characters_complete", cs.complete);
    put(r, "coderivations", listed);
}

/// "C<k>" from the discovered list, or "0@<character>".
Coderivation resolve(Session& s, const CartanPair& pair, const std::vector<Coderivation>& cods,
                     const std::string& ref)
{
    if (ref.size() > 2 && ref.substr(0, 2) == "0@")
        return Coderivation{pair.zero(), s.character_named(ref.substr(2))};
    if (ref.size() > 1 && ref[0] == 'C' && ref.find_first_not_of("0123456789", 1) == std::string::npos &&
        ref.size() < 10) {
        const std::size_t k = std::stoul(ref.substr(1));
        if (k < cods.size())
            return cods[k];
        throw InputError("no coderivation " + ref + " (" + std::to_string(cods.size()) + " discovered)");
    }
    throw InputError("bad coderivation reference '" + ref + "' (expected C<k> or 0@<character>)");
}

void cmd_bracket(Session& s, const RunOptions& o, RunReport& r)
{
    if (o.args.size() != 2)
        throw InputError("bracket needs two coderivation references");
    const Fodc f = s.calculus(o.ideal);
    put(r, "calculus", Session::calculus_label(o.ideal));
    const auto pair = build_pair(f, r);
    if (!pair)
        return;
    const CharacterSet& cs = s.characters();
    const auto cods = discover_coderivations(*pair, cs);
    const Coderivation x = resolve(s, *pair, cods, o.args[0]);
    const Coderivation y = resolve(s, *pair, cods, o.args[1]);
    put(r, "x", o.args[0] + " [" + s.character_name(x.witness.functional) + "] " + pair->describe(x.field));
    put(r, "y", o.args[1] + " [" + s.character_name(y.witness.functional) + "] " + pair->describe(y.field));

    const std::string commute = "witness translations commute";
    if (!witnesses_commute(x, y)) {
        add_check(r, "", fail(commute, s.character_name(x.witness.functional) + " and " +
                                           s.character_name(y.witness.functional)));
        r.error = ReportError{"witness translations do not commute (L L' != L' L), so [X, Y] is undefined"};
        return;
    }
    add_check(r, "", pass(commute));
    Coderivation z;
    try {
        z = lie_bracket(*pair, x, y, cs);
    } catch (const std::exception& e) {
        add_check(r, "", fail("bracket", e.what()));
        r.error = ReportError{e.what()};
        return;
    }
    const Matrix rx = pair->rho(x.field);
    const Matrix ry = pair->rho(y.field);
    add_check(r, "", pair->rho(z.field) == rx * ry - ry * rx
                         ? pass("rho([X,Y]) = rho(X)rho(Y) - rho(Y)rho(X)")
                         : fail("rho([X,Y]) = rho(X)rho(Y) - rho(Y)rho(X)", "operators differ"));
    add_check(r, "", z.witness.translation == x.witness.translation * y.witness.translation
                         ? pass("witness of [X,Y] is L L'")
                         : fail("witness of [X,Y] is L L'", s.character_name(z.witness.functional)));
    add_checks(r, "[X,Y]", check_coderivation(*pair, z, cs));
    put(r, "bracket", pair->describe(z.field));
    put(r, "witness", s.character_name(z.witness.functional));
}

void cmd_verify(Session& s, const RunOptions& o, RunReport& r)
{
    static const std::vector<std::string> suites{"hopf", "fodc", "translations", "bracket", "all"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
        throw InputError("unknown suite '" + o.suite + "' (expected hopf, fodc, translations, bracket or all)");
    put(r, "suite", o.suite);
    run_suite(s, o.suite, r);
}

const std::map<std::string, Command>& commands()
{
    static const std::map<std::string, Command> table{
        {"validate", cmd_validate},       {"universal", cmd_universal},
        {"woronowicz", cmd_woronowicz},   {"quantum-lie", cmd_quantum_lie},
        {"characters", cmd_characters},   {"vfields", cmd_vfields},
        {"coderivations", cmd_coderivations}, {"bracket", cmd_bracket},
        {"verify", cmd_verify},
    };
    return table;
}

void fail_input(RunReport& r, const std::string& message, std::optional<SourcePos> pos)
{
    ReportError e{message};
    if (pos) {
        e.line = pos->line;
        e.column = pos->column;
    }
    r.error = e;
    r.exit_code = 2;
}

}  // namespace
}  // namespace shell

RunReport run_command(std::string_view hadf_text, const RunOptions& options)
{
    using namespace shell;
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.command = options.command;
    r.digest = "fnv1a64:" + fnv1a_hex(hadf_text);
    r.seed = options.seed;
    if (options.ideal)
        r.args.emplace_back("ideal", *options.ideal);
    if (options.command == "verify")
        r.args.emplace_back("suite", options.suite);
    for (std::size_t i = 0; i < options.args.size(); ++i)
        r.args.emplace_back("arg" + std::to_string(i), options.args[i]);
    if (options.field_override)
        r.args.emplace_back("field_override", *options.field_override);

    auto finish = [&] {
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    const auto it = commands().find(options.command);
    if (it == commands().end()) {
        fail_input(r, "unknown command '" + options.command + "'", std::nullopt);
        return finish();
    }
    try {
        std::optional<Field> field;
        if (options.field_override)
            field = parse_field_override(*options.field_override);
        DefinitionDocument doc = parse_hadf(hadf_text);
        auto h = std::make_shared<const HopfAlgebra>(build_algebra(doc, field));
        r.field = h->field().to_string();
        Session s(std::move(doc), h, options.seed);
        if (options.command != "validate" && options.command != "verify") {
            const CheckList hopf = validate_hopf(*h);
            if (!hopf.all_passed()) {
                add_checks(r, "hopf", hopf);
                r.error = ReportError{"the algebra fails the Hopf axioms"};
                r.exit_code = 1;
                return finish();
            }
        }
        it->second(s, options, r);
        r.exit_code = (r.error || r.count(CheckStatus::fail) > 0) ? 1 : 0;
    } catch (const HadfError& e) {
        fail_input(r, e.message(), e.pos());
    } catch (const InputError& e) {
        fail_input(r, e.what(), e.pos);
    } catch (const std::invalid_argument& e) {
        fail_input(r, e.what(), std::nullopt);
    } catch (const std::exception& e) {
        // a construction invariant broke: report it as a failed check
        add_check(r, "", fail("internal consistency", e.what()));
        r.error = ReportError{e.what()};
        r.exit_code = 1;
    }
    return finish();
}

}  // namespace hopfcalc
