#include <cstdio>
#include <sstream>

#include "slab/cli.hpp"

namespace slab::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string spectrum_csv(const SpectrumTable& t) {
    std::ostringstream os;
    os << "branch,root_index,k,epsilon,re_root,im_root,residual\n";
    for (const auto& r : t.rows)
        os << r.branch << ',' << r.root_index << ',' << format_double(r.k) << ',' << format_double(r.energy) << ','
           << format_double(r.root.real()) << ',' << format_double(r.root.imag()) << ',' << format_double(r.residual)
           << '\n';
    return os.str();
}

}  // namespace slab::cli
