#pragma once

#include "arith.hpp"

namespace wrt {

// element of Z[1/b]: a reduced fraction whose denominator only has primes of b
class BRational {
public:
    BRational() = default;
    BRational(const Rational& v, long b) : v_(v), b_(b) {
        v_.canonicalize();
        require(b_ != 0, "BRational: inverted integer must be nonzero");
        require(supported_by(v_.get_den(), b_),
                "BRational: denominator " + v_.get_den().get_str() + " not a unit in Z[1/" +
                    std::to_string(b_) + "]");
    }

    const Rational& value() const { return v_; }
    long inverted() const { return b_; }

    friend BRational operator+(const BRational& x, const BRational& y) {
        return BRational(x.v_ + y.v_, lcm_ll(labs_ll(x.b_), labs_ll(y.b_)));
    }
    friend BRational operator-(const BRational& x, const BRational& y) {
        return BRational(x.v_ - y.v_, lcm_ll(labs_ll(x.b_), labs_ll(y.b_)));
    }
    friend BRational operator*(const BRational& x, const BRational& y) {
        return BRational(x.v_ * y.v_, lcm_ll(labs_ll(x.b_), labs_ll(y.b_)));
    }
    friend bool operator==(const BRational& x, const BRational& y) { return x.v_ == y.v_; }

private:
    Rational v_ = 0;
    long b_ = 1;
};

}  // namespace wrt
