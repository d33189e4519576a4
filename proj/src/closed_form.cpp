#include "kernint/closed_form.hpp"

#include <cmath>

namespace kernint {

namespace {

void require_b_in_strip(double b) {
    if (!(std::abs(b) < 1.0)) {
        throw Error(ErrorKind::DomainError, "|b| must be < 1");
    }
}

}  // namespace

double eval_sec_case(double b) {
    require_b_in_strip(b);
    return eval_P(pi / 2, b).value;
}

double eval_tan_case(double b) {
    require_b_in_strip(b);
    return (pi / 2) * std::tan(pi * b / 2);
}

double eval_sech_transform(double a, double q) {
    return eval_P(complex(a, 0.0), complex(0.0, q)).value.real();
}

double eval_sech2_transform(double q) {
    return eval_P(complex(0.0, 0.0), complex(0.0, q)).value.real();
}

ClosedValue<complex> eval_f_form(const complex& f, const complex& b) {
    if (f == complex(0.0, 0.0) || !(std::abs(std::arg(f)) < pi)) {
        throw Error(ErrorKind::DomainError, "f must satisfy |arg f| < pi");
    }
    return eval_P(complex(0.0, 1.0) * std::log(f), b);
}

double eval_f_cos_form(double f, double q) {
    if (!(f > 0.0)) {
        throw Error(ErrorKind::DomainError, "f must be positive");
    }
    return 0.5 * eval_P(complex(0.0, std::log(f)), complex(0.0, q)).value.real();
}

}  // namespace kernint
