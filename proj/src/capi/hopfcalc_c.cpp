#include "hopfcalc/hopfcalc.h"

#include "hopfcalc/fields.hpp"
#include "hopfcalc/hadf.hpp"
#include "hopfcalc/shell.hpp"

#include <memory>
#include <new>
#include <string>

struct hc_algebra {
    hopfcalc::DefinitionDocument doc;
    std::shared_ptr<const hopfcalc::HopfAlgebra> algebra;
};

struct hc_calculus {
    hopfcalc::Fodc fodc;
    std::size_t field_dim;
};

struct hc_report {
    int exit_code;
    std::string text;
    std::string json;
};

namespace {

struct LastError {
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

thread_local LastError last_error;

hc_status set_error(hc_status status, const std::string& message, std::size_t line = 0, std::size_t column = 0)
{
    last_error = LastError{message, line, column};
    return status;
}

/// Runs f, translating exceptions into status codes.
template <class F>
hc_status guarded(F&& f)
{
    try {
        last_error = LastError{};
        return f();
    } catch (const hopfcalc::HadfError& e) {
        return set_error(HC_ERR_INPUT, e.message(), e.pos().line, e.pos().column);
    } catch (const hopfcalc::ConsistencyError& e) {
        return set_error(HC_ERR_CONSISTENCY, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(HC_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(HC_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return set_error(HC_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(HC_ERR_INTERNAL, "unknown error");
    }
}

hc_status make_calculus(const hc_algebra* a, const std::optional<std::string>& ideal, hc_calculus** out)
{
    using namespace hopfcalc;
    if (!ideal) {
        Fodc f = universal_fodc(a->algebra);
        const std::size_t fd = CartanPair(f).dim();
        *out = new hc_calculus{std::move(f), fd};
        return HC_OK;
    }
    const NamedVectors* named = a->doc.find_ideal(*ideal);
    if (!named)
        return set_error(HC_ERR_INPUT, "unknown ideal '" + *ideal + "'");
    Fodc f = woronowicz_from_ideal(a->algebra, build_vectors(a->doc, *named, a->algebra->field()));
    const std::size_t fd = CartanPair(f).dim();
    *out = new hc_calculus{std::move(f), fd};
    return HC_OK;
}

}  // namespace

extern "C" {

const char* hc_last_error(void) { return last_error.message.c_str(); }
size_t hc_last_error_line(void) { return last_error.line; }
size_t hc_last_error_column(void) { return last_error.column; }
const char* hc_version(void) { return hopfcalc::kToolVersion; }

hc_status hc_algebra_parse(const char* hadf_text, size_t length, const char* field_override, hc_algebra** out)
{
    if (!hadf_text || !out)
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        std::optional<hopfcalc::Field> field;
        if (field_override)
            field = hopfcalc::parse_field_override(field_override);
        auto doc = hopfcalc::parse_hadf(std::string_view(hadf_text, length));
        auto h = std::make_shared<const hopfcalc::HopfAlgebra>(hopfcalc::build_algebra(doc, field));
        *out = new hc_algebra{std::move(doc), std::move(h)};
        return HC_OK;
    });
}

void hc_algebra_free(hc_algebra* algebra) { delete algebra; }

size_t hc_algebra_dim(const hc_algebra* algebra) { return algebra ? algebra->algebra->dim() : 0; }

hc_status hc_algebra_validate(const hc_algebra* algebra, int* valid)
{
    if (!algebra || !valid)
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        const auto checks = hopfcalc::validate_hopf(*algebra->algebra);
        *valid = checks.all_passed() ? 1 : 0;
        if (const auto* f = checks.first_failure())
            last_error.message = f->name + ": " + f->witness;
        return HC_OK;
    });
}

hc_status hc_algebra_character_count(const hc_algebra* algebra, size_t* count)
{
    if (!algebra || !count)
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        *count = hopfcalc::find_characters(*algebra->algebra).characters.size();
        return HC_OK;
    });
}

hc_status hc_calculus_universal(const hc_algebra* algebra, hc_calculus** out)
{
    if (!algebra || !out)
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return make_calculus(algebra, std::nullopt, out); });
}

hc_status hc_calculus_woronowicz(const hc_algebra* algebra, const char* ideal_name, hc_calculus** out)
{
    if (!algebra || !ideal_name || !out)
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return make_calculus(algebra, std::string(ideal_name), out); });
}

void hc_calculus_free(hc_calculus* calculus) { delete calculus; }

size_t hc_calculus_omega_dim(const hc_calculus* calculus) { return calculus ? calculus->fodc.omega_dim() : 0; }

size_t hc_calculus_field_dim(const hc_calculus* calculus) { return calculus ? calculus->field_dim : 0; }

hc_status hc_calculus_quantum_lie_dim(const hc_calculus* calculus, size_t* dim)
{
    if (!calculus || !dim)
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        *dim = hopfcalc::quantum_lie(calculus->fodc).dim();
        return HC_OK;
    });
}

hc_status hc_run(const char* hadf_text, size_t length, const hc_run_options* options, hc_report** out)
{
    if (!hadf_text || !options || !options->command || !out || (options->arg_count && !options->args))
        return set_error(HC_ERR_NULL_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        hopfcalc::RunOptions o;
        o.command = options->command;
        for (std::size_t i = 0; i < options->arg_count; ++i)
            o.args.emplace_back(options->args[i] ? options->args[i] : "");
        if (options->ideal)
            o.ideal = options->ideal;
        if (options->suite)
            o.suite = options->suite;
        o.seed = options->seed;
        if (options->field_override)
            o.field_override = options->field_override;
        const hopfcalc::RunReport r = hopfcalc::run_command(std::string_view(hadf_text, length), o);
        *out = new hc_report{r.exit_code, hopfcalc::render_text(r), hopfcalc::render_json(r)};
        return HC_OK;
    });
}

void hc_report_free(hc_report* report) { delete report; }
int hc_report_exit_code(const hc_report* report) { return report ? report->exit_code : 2; }
const char* hc_report_text(const hc_report* report) { return report ? report->text.c_str() : ""; }
const char* hc_report_json(const hc_report* report) { return report ? report->json.c_str() : ""; }

}  // extern "C"
