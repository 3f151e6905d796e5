#include "pdnf/scalar.hpp"

#include "pdnf/errors.hpp"

#include <ostream>

namespace pdnf {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::AxisOutOfRange: return "AxisOutOfRange";
    case ErrorKind::DegreeZeroForm: return "DegreeZeroForm";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonVanishingAtOrigin: return "NonVanishingAtOrigin";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SpectrumNotInField: return "SpectrumNotInField";
    case ErrorKind::NotDiagonalized: return "NotDiagonalized";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::NotIsochore: return "NotIsochore";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::InternalFault: return "InternalFault";
    }
    return "Unknown";
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    Rational n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rational_to_string(const Rational& q) {
    return q.get_str(10);
}

std::string Scalar::to_string() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) return rational_to_string(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rational_to_string(im_) + "*i";
    }
    if (!has_re) return imag;
    std::string out = rational_to_string(re_);
    if (imag[0] != '-') out += '+';
    return out + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

}  // namespace pdnf
