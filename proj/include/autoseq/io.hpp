#pragma once

#include <sstream>
#include <string>

#include "f2series.hpp"
#include "ratseries.hpp"
#include "seq.hpp"

namespace autoseq::io {

/// CSV with header `n,coeff`, one exact coefficient per line.
inline std::string series_csv(const F2Series& s) {
    std::ostringstream os;
    os << "n,coeff\n";
    for (std::size_t i = 0; i < s.trunc(); ++i) os << i << "," << s.coeff(i) << "\n";
    return os.str();
}

inline std::string series_csv(const RatSeries& s) {
    std::ostringstream os;
    os << "n,coeff\n";
    for (std::size_t i = 0; i < s.trunc(); ++i)
        os << i << "," << s.coeff(i).get_str() << "\n";
    return os.str();
}

/// CSV with header `n,value`.
inline std::string prefix_csv(const seq::Prefix& p) {
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t i = 0; i < p.values.size(); ++i) os << i << "," << p.values[i] << "\n";
    return os.str();
}

}  // namespace autoseq::io
