#include "cli_support.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include "kernint/errors.hpp"

namespace kernint::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

double parse_real(std::string_view text) {
    std::string_view s = text;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        parse_fail("not a real number", text);
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

std::vector<double> parse_range(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        parse_fail("range must be start:step:stop", text);
    }
    const double start = parse_real(parts[0]);
    const double step = parse_real(parts[1]);
    const double stop = parse_real(parts[2]);
    if (step == 0.0 || (stop - start) / step < -0.5) {
        parse_fail("empty or endless range", text);
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
    if (count > 10'000'000) {
        parse_fail("range too long", text);
    }
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = start + static_cast<double>(i) * step;
    }
    return values;
}

json optional_number(const std::optional<double>& v) {
    if (v && std::isfinite(*v)) {
        return *v;
    }
    return nullptr;
}

std::string optional_csv(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

double number_field(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

}  // namespace

complex parse_complex(std::string_view text) {
    if (text.empty()) {
        parse_fail("empty complex literal", text);
    }
    if (text.back() != 'i') {
        return {parse_real(text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // the sign that separates real and imaginary parts is not the leading one
    // and does not belong to an exponent
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    auto imag_of = [&](std::string_view s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        return parse_real(s);
    };
    if (split_at == std::string_view::npos) {
        return {0.0, imag_of(body)};
    }
    return {parse_real(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

UpperLimit parse_upper(std::string_view text) {
    if (text == "inf" || text == "Infinity" || text == "infinity") {
        return UpperLimit::infinity();
    }
    const double x = parse_real(text);
    if (!(x > 0.0)) {
        parse_fail("upper limit must be positive", text);
    }
    return UpperLimit::finite(x);
}

std::vector<double> parse_real_grid(std::string_view text) {
    if (text.find(':') != std::string_view::npos) {
        return parse_range(text);
    }
    std::vector<double> values;
    for (const auto part : split(text, ',')) {
        values.push_back(parse_real(part));
    }
    return values;
}

std::vector<complex> parse_complex_grid(std::string_view text) {
    std::vector<complex> values;
    if (text.find(':') != std::string_view::npos) {
        for (const double v : parse_range(text)) {
            values.emplace_back(v, 0.0);
        }
        return values;
    }
    for (const auto part : split(text, ',')) {
        values.push_back(parse_complex(part));
    }
    return values;
}

std::uint64_t Lcg::next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
}

double Lcg::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::vector<IntegrandSpec> random_specs(std::size_t count, std::uint64_t seed) {
    Lcg rng(seed);
    std::vector<IntegrandSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u1 = rng.uniform();
        const double u2 = rng.uniform();
        const double u3 = rng.uniform();
        const double u4 = rng.uniform();
        const double u5 = rng.uniform();
        const double u6 = rng.uniform();
        IntegrandSpec s;
        const int n = 1 + static_cast<int>(std::floor(6.0 * u1));
        s.n = n;
        if (u2 < 0.5) {
            s.p = complex(std::floor((2.0 * n - 1.0) * u3) - (n - 1), 0.0);
        } else {
            s.p = complex((1.8 * u3 - 0.9) * n, 0.0);
        }
        s.theta = 0.05 + (two_pi - 0.1) * u4;
        s.zeta = pi * u5;
        s.upper = u6 >= 0.75 ? UpperLimit::infinity() : UpperLimit::one();
        specs.push_back(s);
    }
    return specs;
}

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

json to_json(const complex& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json to_json(const UpperLimit& upper) {
    switch (upper.kind) {
        case UpperLimit::Kind::One:
            return "1";
        case UpperLimit::Kind::Infinity:
            return "inf";
        case UpperLimit::Kind::Finite:
            return upper.x;
    }
    return nullptr;
}

json to_json(const IntegrandSpec& spec) {
    return json{{"n", spec.n},
                {"p", to_json(spec.p)},
                {"theta", spec.theta},
                {"zeta", spec.zeta},
                {"upper", to_json(spec.upper)}};
}

json to_json(const EvalReport& r) {
    json j;
    j["spec"] = to_json(r.spec);
    j["normalized"] = json{{"a", to_json(r.normalized.a)},
                           {"b", to_json(r.normalized.b)},
                           {"c", r.normalized.c},
                           {"scale", r.normalized.scale}};
    j["domain"] = json{{"kind", to_string(r.domain.kind)}, {"detail", r.domain.detail}};
    j["closed"] = optional_number(r.closed);
    j["pf"] = optional_number(r.pf);
    j["quad"] = optional_number(r.quad);
    j["series"] = optional_number(r.series);
    j["max_abs_err"] = r.max_abs_err;
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
    return j;
}

json to_json(const Decomposition& d) {
    json terms = json::array();
    for (std::size_t k = 0; k < d.terms.size(); ++k) {
        terms.push_back(json{{"k", k}, {"omega", d.terms[k].omega}, {"coeff", d.terms[k].coeff}});
    }
    return terms;
}

json to_json(const SeriesResult& r) {
    return json{{"value", r.value},
                {"terms_used", r.terms_used},
                {"tail_estimate", r.tail_estimate},
                {"accelerated", r.accelerated}};
}

json to_json(const ParadoxReport& r) {
    json j;
    j["kind"] = to_string(r.kind);
    j["formula_value"] = to_json(r.formula_value);
    j["oracle_value"] = optional_number(r.oracle_value);
    j["mismatch"] = optional_number(r.mismatch);
    j["manifested"] = r.manifested;
    if (r.kind == ParadoxKind::Periodicity) {
        j["k"] = r.shift;
        j["restored_mismatch"] = optional_number(r.restored_mismatch);
    } else {
        j["pole_t"] = optional_number(r.pole_t);
        j["pole_x"] = optional_number(r.pole_x);
        j["control_value"] = optional_number(r.control_value);
        j["control_quad"] = optional_number(r.control_quad);
    }
    j["explanation"] = r.explanation;
    return j;
}

IntegrandSpec spec_from_json(const json& input) {
    if (!input.is_object()) {
        throw Error(ErrorKind::ParseError, "grid entry must be an object");
    }
    const json& j = input.contains("spec") ? input.at("spec") : input;
    if (!j.is_object() || !j.contains("n")) {
        throw Error(ErrorKind::ParseError, "grid entry needs at least 'n'");
    }
    IntegrandSpec spec;
    spec.n = number_field(j, "n", 1.0);
    if (j.contains("p")) {
        const auto& p = j.at("p");
        if (p.is_number()) {
            spec.p = complex(p.get<double>(), 0.0);
        } else if (p.is_string()) {
            spec.p = parse_complex(p.get<std::string>());
        } else if (p.is_object()) {
            spec.p = complex(number_field(p, "re", 0.0), number_field(p, "im", 0.0));
        } else {
            throw Error(ErrorKind::ParseError, "field 'p' has an unsupported type");
        }
    }
    spec.theta = number_field(j, "theta", spec.theta);
    spec.zeta = number_field(j, "zeta", spec.zeta);
    if (j.contains("upper")) {
        const auto& u = j.at("upper");
        if (u.is_string()) {
            spec.upper = parse_upper(u.get<std::string>());
        } else if (u.is_number()) {
            const double x = u.get<double>();
            if (!(x > 0.0)) {
                throw Error(ErrorKind::ParseError, "upper limit must be positive");
            }
            spec.upper = UpperLimit::finite(x);
        } else {
            throw Error(ErrorKind::ParseError, "field 'upper' has an unsupported type");
        }
    }
    return spec;
}

std::vector<IntegrandSpec> read_grid(const std::string& text) {
    std::vector<IntegrandSpec> specs;
    try {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) {
            throw Error(ErrorKind::ParseError, "empty grid");
        }
        if (text[first] == '[') {
            const json j = json::parse(text);
            for (const auto& item : j) {
                specs.push_back(spec_from_json(item));
            }
            return specs;
        }
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            specs.push_back(spec_from_json(json::parse(line)));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed grid: ") + e.what());
    }
    return specs;
}

std::string csv_row(const EvalReport& r) {
    std::ostringstream out;
    out << format_double(r.spec.n) << ',' << format_double(r.spec.p.real()) << ','
        << format_double(r.spec.p.imag()) << ',' << format_double(r.spec.theta) << ','
        << format_double(r.spec.zeta) << ',' << to_string(r.spec.upper) << ',' << to_string(r.domain.kind)
        << ',' << optional_csv(r.closed) << ',' << optional_csv(r.pf) << ',' << optional_csv(r.quad) << ','
        << optional_csv(r.series) << ',' << format_double(r.max_abs_err) << ',' << to_string(r.verdict);
    return out.str();
}

std::vector<EvalReport> sweep(const std::vector<IntegrandSpec>& specs, double tol, ThetaPolicy policy,
                              unsigned threads) {
    std::vector<EvalReport> reports(specs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(specs.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            reports[i] = verify_point(specs[i], tol, policy);
        }
    };
    if (workers == 1) {
        work();
        return reports;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    for (auto& th : pool) {
        th.join();
    }
    return reports;
}

}  // namespace kernint::cli
