#include "dihedral/dihedral.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "dihedral/cyclo.hpp"
#include "dihedral/dims.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/printed_forms.hpp"
#include "dihedral/series.hpp"

struct dr_series {
    dihedral::PowerSeries series;
};

struct dr_report {
    dihedral::PrintedFormReport report;
};

namespace {

using namespace dihedral;

thread_local std::string last_error;

dr_status fail(dr_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
dr_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const InvalidArgument& e) {
        return fail(DR_ERR_INVALID_ARGUMENT, e.what());
    } catch (const CapExceeded& e) {
        return fail(DR_ERR_CAP_EXCEEDED, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DR_ERR_CAP_EXCEEDED, "out of memory");
    } catch (const std::exception& e) {
        return fail(DR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DR_ERR_INTERNAL, "unknown exception");
    }
}

dr_status write_text(const std::string& text, char* buf, size_t capacity, size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (buf == nullptr || capacity < text.size() + 1) {
        return fail(DR_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) +
                                                 " bytes");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return DR_OK;
}

dr_status write_int(const mpz_class& value, int64_t* out) {
    if (!value.fits_slong_p()) return fail(DR_ERR_OVERFLOW, value.get_str() + " exceeds int64");
    *out = value.get_si();
    return DR_OK;
}

CharacterId to_character(int64_t n, dr_char chi) {
    switch (chi.kind) {
    case DR_CHAR_LINEAR: return CharacterId::linear(n, static_cast<int>(chi.index));
    case DR_CHAR_TWO_DIM: return CharacterId::two_dim(n, chi.index);
    default: throw InvalidArgument("unknown character kind " + std::to_string(chi.kind));
    }
}

dr_char from_character(const CharacterId& chi) {
    return {chi.kind() == CharacterId::Kind::Linear ? DR_CHAR_LINEAR : DR_CHAR_TWO_DIM,
            chi.index()};
}

std::string character_name(dr_char chi) {
    if (chi.kind == DR_CHAR_LINEAR) return "chi" + std::to_string(chi.index);
    if (chi.kind == DR_CHAR_TWO_DIM) return "psi:" + std::to_string(chi.index);
    throw InvalidArgument("unknown character kind " + std::to_string(chi.kind));
}

dr_status null_argument(const char* what) {
    return fail(DR_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

} // namespace

extern "C" {

const char* dr_version(void) { return "1.0.0"; }

const char* dr_status_string(dr_status status) {
    switch (status) {
    case DR_OK: return "ok";
    case DR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DR_ERR_CAP_EXCEEDED: return "resource cap exceeded";
    case DR_ERR_OVERFLOW: return "integer overflow";
    case DR_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DR_ERR_INTERNAL: return "internal inconsistency";
    }
    return "unknown status";
}

const char* dr_last_error(void) { return last_error.c_str(); }

dr_status dr_char_parse(int64_t n, const char* text, dr_char* out) {
    if (!text || !out) return null_argument("text and out");
    return guarded([&] {
        *out = from_character(CharacterId::parse(n, text));
        return DR_OK;
    });
}

dr_status dr_char_name(dr_char chi, char* buf, size_t capacity, size_t* needed) {
    return guarded([&] { return write_text(character_name(chi), buf, capacity, needed); });
}

int dr_char_degree(dr_char chi) { return chi.kind == DR_CHAR_TWO_DIM ? 2 : 1; }

dr_status dr_irreducible_characters(int64_t n, dr_char* out, size_t capacity, size_t* count) {
    if (!count) return null_argument("count");
    return guarded([&] {
        const auto chars = irreducible_characters(n);
        *count = chars.size();
        if (!out) return DR_OK;
        if (capacity < chars.size()) {
            return fail(DR_ERR_BUFFER_TOO_SMALL, "character array needs " +
                                                     std::to_string(chars.size()) + " slots");
        }
        for (size_t i = 0; i < chars.size(); ++i) out[i] = from_character(chars[i]);
        return DR_OK;
    });
}

dr_status dr_monomial_count(int64_t n, int64_t d, int64_t* out) {
    if (!out) return null_argument("out");
    return guarded([&] { return write_int(monomial_count(n, d), out); });
}

dr_status dr_dim(int64_t n, int64_t d, dr_char chi, dr_method method, size_t cap, int64_t* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        const CharacterId id = to_character(n, chi);
        const size_t effective_cap = cap == 0 ? DR_DEFAULT_CAP : cap;
        Method m;
        switch (method) {
        case DR_METHOD_CLOSED_FORM: m = Method::ClosedForm; break;
        case DR_METHOD_CHAR_SUM: m = Method::CharSum; break;
        case DR_METHOD_RANK: m = Method::Rank; break;
        default: return fail(DR_ERR_INVALID_ARGUMENT, "unknown method");
        }
        return write_int(dimension(n, d, id, m, effective_cap).value, out);
    });
}

dr_status dr_series_generating(int64_t n, dr_char chi, int64_t order, dr_series** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dr_series{generating_function(n, to_character(n, chi), order)};
        return DR_OK;
    });
}

int64_t dr_series_order(const dr_series* series) { return series ? series->series.order() : -1; }

dr_status dr_series_coeff(const dr_series* series, int64_t degree, char* buf, size_t capacity,
                          size_t* needed) {
    if (!series) return null_argument("series");
    return guarded([&] {
        if (degree < 0 || degree > series->series.order()) {
            return fail(DR_ERR_INVALID_ARGUMENT, "degree outside 0..order");
        }
        return write_text(series->series[degree].get_str(), buf, capacity, needed);
    });
}

dr_status dr_series_coeff_int(const dr_series* series, int64_t degree, int64_t* out) {
    if (!series || !out) return null_argument("series and out");
    return guarded([&] {
        if (degree < 0 || degree > series->series.order()) {
            return fail(DR_ERR_INVALID_ARGUMENT, "degree outside 0..order");
        }
        const mpq_class& c = series->series[degree];
        if (c.get_den() != 1) {
            return fail(DR_ERR_INTERNAL, "coefficient " + c.get_str() + " is not an integer");
        }
        return write_int(c.get_num(), out);
    });
}

void dr_series_free(dr_series* series) { delete series; }

dr_status dr_report_create(int64_t n, int64_t order, dr_report** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new dr_report{printed_form_report(n, order)};
        return DR_OK;
    });
}

size_t dr_report_size(const dr_report* report) {
    return report ? report->report.checks.size() : 0;
}

dr_status dr_report_get(const dr_report* report, size_t i, dr_report_entry* out) {
    if (!report || !out) return null_argument("report and out");
    if (i >= report->report.checks.size()) {
        return fail(DR_ERR_INVALID_ARGUMENT, "report index out of range");
    }
    const PrintedFormCheck& check = report->report.checks[i];
    out->label = check.label.c_str();
    out->expression = check.expression.c_str();
    out->first_divergence = check.first_divergence().value_or(-1);
    out->divergence_count = check.divergent_degrees.size();
    out->printed_is_integral = check.printed.has_integer_coefficients() ? 1 : 0;
    return DR_OK;
}

dr_status dr_report_coeff(const dr_report* report, size_t i, int which, int64_t degree,
                          char* buf, size_t capacity, size_t* needed) {
    if (!report) return null_argument("report");
    return guarded([&] {
        if (i >= report->report.checks.size() || (which != 0 && which != 1) || degree < 0 ||
            degree > report->report.order) {
            return fail(DR_ERR_INVALID_ARGUMENT, "report coefficient out of range");
        }
        const PrintedFormCheck& check = report->report.checks[i];
        const PowerSeries& s = which == 0 ? check.printed : check.expected;
        return write_text(s[degree].get_str(), buf, capacity, needed);
    });
}

void dr_report_free(dr_report* report) { delete report; }

} // extern "C"
