#include "tetra/rational.hpp"

#include <sstream>

namespace tetra {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool have_re = sgn(re_) != 0;
    if (have_re) os << re_;
    if (sgn(im_) != 0) {
        if (have_re && sgn(im_) > 0) os << "+";
        if (im_ == 1)
            os << "i";
        else if (im_ == -1)
            os << "-i";
        else
            os << im_ << "i";
    }
    return os.str();
}

}  // namespace tetra
