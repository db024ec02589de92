#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tbr {

enum class Design { Random, Fixed };

struct Sample {
    double x;  // covariate / design point in [0, 1]
    double y;  // response
};

// Samples sorted ascending by x. For the fixed design the points must be
// strictly increasing and strictly inside (0, 1).
class Dataset {
public:
    Dataset(std::vector<Sample> samples, Design design);

    // Sorts by x first, then validates.
    static Dataset from_unsorted(std::vector<Sample> samples, Design design);

    std::size_t size() const { return samples_.size(); }
    const std::vector<Sample>& samples() const { return samples_; }
    const Sample& operator[](std::size_t i) const { return samples_[i]; }
    Design design() const { return design_; }

    std::vector<double> xs() const;
    std::vector<double> ys() const;

    // Empirical cdf of the covariates, (1/n) #{i : x_i <= s}.
    double empirical_cdf_x(double s) const;
    // Integer count #{i : x_i <= s}.
    std::size_t count_x_le(double s) const;

    // CSV with header "x,y", 17 significant digits.
    void write_csv(std::ostream& out) const;
    static Dataset read_csv(std::istream& in, Design design);

private:
    std::vector<Sample> samples_;
    Design design_;
};

}  // namespace tbr
