#pragma once

#include "nalg/algebra.hpp"
#include "nalg/catalog.hpp"
#include "nalg/error.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace nalg::testing {

/// Kind of the Error thrown by f; records a failure when nothing is thrown.
inline ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::PreconditionFailed;
}

inline AlgebraBundle bundle_of(const std::string& fixture_name)
{
    return fixture(fixture_name).bundle;
}

inline MultTable product_of(const std::string& fixture_name, const std::string& product)
{
    return fixture(fixture_name).bundle.product(product);
}

inline AlgebraBundle single(const std::string& name, const MultTable& t)
{
    AlgebraBundle b(t.dim());
    b.add(name, t);
    return b;
}

/// e_i as a vector of length n.
inline Vector e(std::size_t n, std::size_t i)
{
    return Vector::basis(n, i);
}

} // namespace nalg::testing
