#include "nalg/rational.hpp"
#include "nalg/error.hpp"

#include <cctype>

namespace nalg {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::UnassignedVariable: return "UnassignedVariable";
    case ErrorKind::UnknownSystem: return "UnknownSystem";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownOperation: return "UnknownOperation";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotAntiO: return "NotAntiO";
    case ErrorKind::NotPerm: return "NotPerm";
    case ErrorKind::OperatorAxiomFails: return "OperatorAxiomFails";
    case ErrorKind::NotAntiPreLeibniz: return "NotAntiPreLeibniz";
    case ErrorKind::NotPreLeibniz: return "NotPreLeibniz";
    case ErrorKind::NotNovikovDialgebra: return "NotNovikovDialgebra";
    case ErrorKind::NotGDAlgebra: return "NotGDAlgebra";
    case ErrorKind::NotGDDialgebra: return "NotGDDialgebra";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    }
    return "Unknown";
}

namespace {

// Optional run of signs followed by one or more decimal digits.
bool split_signed_digits(std::string_view part, bool& negative, std::string_view& digits)
{
    negative = false;
    std::size_t pos = 0;
    while (pos < part.size() && (part[pos] == '-' || part[pos] == '+')) {
        if (part[pos] == '-')
            negative = !negative;
        ++pos;
    }
    digits = part.substr(pos);
    if (digits.empty())
        return false;
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw Error(ErrorKind::ParseError, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::SingularMatrix, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos)
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");

    bool num_neg = false, den_neg = false;
    std::string_view num_digits, den_digits;
    if (!split_signed_digits(num_part, num_neg, num_digits) || !split_signed_digits(den_part, den_neg, den_digits))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");

    mpz_class num(std::string(num_digits), 10);
    mpz_class den(std::string(den_digits), 10);
    if (den == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (num_neg != den_neg)
        num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace nalg
