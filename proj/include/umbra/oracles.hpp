#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "umbra/jets.hpp"

namespace umbra {

// An analytic family member the engine can differentiate to any order at any
// admissible point. Built-in families only; the CLI exposes them by name.
class Oracle {
public:
    virtual ~Oracle() = default;
    virtual std::string name() const = 0;
    virtual Jet jet(const Complex& p, int order) const = 0;
    // singularity at p (pole/branch point); the engine screens the lattice
    virtual bool singular_at(const Complex& p) const { (void)p; return false; }
    // throws kDomain naming the violated constraint
    virtual void check_point(const Complex& p) const { (void)p; }
};

using OraclePtr = std::shared_ptr<const Oracle>;

struct OracleParams {
    std::map<std::string, Complex> values;

    Complex get(const std::string& key, const Complex& fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return values.count(key) != 0; }
};

// Families: exp-neg, exp(rate), pow(alpha, c), inv, log(c), xlogx(c),
// powlog(alpha, c, factor), sinpix-over-x, sin-exp(freq, rate),
// logpi(scale, offset), digamma-pi(scale, offset), x-digamma-pi(scale),
// logzeta(c), zeta-logderiv(c), logsin(freq), zcotz(scale)
OraclePtr make_oracle(const std::string& name, const OracleParams& params = {});

std::vector<std::string> oracle_names();

} // namespace umbra
