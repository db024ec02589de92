#include "tbr/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tbr {

Dataset::Dataset(std::vector<Sample> samples, Design design)
    : samples_(std::move(samples)), design_(design) {
    if (samples_.empty()) {
        throw std::invalid_argument("Dataset: empty sample set");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& s = samples_[i];
        if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
            throw std::invalid_argument("Dataset: non-finite sample at index " +
                                        std::to_string(i));
        }
        if (s.x < 0.0 || s.x > 1.0) {
            throw std::invalid_argument("Dataset: x outside [0,1] at index " +
                                        std::to_string(i));
        }
        if (i > 0 && samples_[i - 1].x > s.x) {
            throw std::invalid_argument("Dataset: samples not sorted by x");
        }
    }
    if (design_ == Design::Fixed) {
        if (samples_.front().x <= 0.0 || samples_.back().x >= 1.0) {
            throw std::invalid_argument(
                "Dataset: fixed design points must lie strictly inside (0,1)");
        }
        for (std::size_t i = 1; i < samples_.size(); ++i) {
            if (samples_[i - 1].x >= samples_[i].x) {
                throw std::invalid_argument(
                    "Dataset: fixed design points must be strictly increasing");
            }
        }
    }
}

Dataset Dataset::from_unsorted(std::vector<Sample> samples, Design design) {
    std::stable_sort(samples.begin(), samples.end(),
                     [](const Sample& a, const Sample& b) { return a.x < b.x; });
    return Dataset(std::move(samples), design);
}

std::vector<double> Dataset::xs() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].x;
    return out;
}

std::vector<double> Dataset::ys() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].y;
    return out;
}

std::size_t Dataset::count_x_le(double s) const {
    auto it = std::upper_bound(
        samples_.begin(), samples_.end(), s,
        [](double v, const Sample& smp) { return v < smp.x; });
    return static_cast<std::size_t>(it - samples_.begin());
}

double Dataset::empirical_cdf_x(double s) const {
    return static_cast<double>(count_x_le(s)) /
           static_cast<double>(samples_.size());
}

void Dataset::write_csv(std::ostream& out) const {
    out << "x,y\n";
    char buf[64];
    for (const Sample& s : samples_) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", s.x, s.y);
        out << buf;
    }
}

Dataset Dataset::read_csv(std::istream& in, Design design) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("CSV: empty input");
    }
    // tolerate a trailing \r from CRLF files
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y") {
        throw std::runtime_error("CSV: expected header \"x,y\", got \"" + line +
                                 "\" at line 1");
    }
    std::vector<Sample> samples;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("CSV: missing comma at line " +
                                     std::to_string(lineno));
        }
        double x = 0.0, y = 0.0;
        try {
            std::size_t used = 0;
            x = std::stod(line.substr(0, comma), &used);
            y = std::stod(line.substr(comma + 1), &used);
        } catch (const std::exception&) {
            throw std::runtime_error("CSV: unparsable number at line " +
                                     std::to_string(lineno));
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw std::runtime_error("CSV: non-finite value at line " +
                                     std::to_string(lineno));
        }
        samples.push_back({x, y});
    }
    if (samples.empty()) {
        throw std::runtime_error("CSV: no data rows");
    }
    return Dataset::from_unsorted(std::move(samples), design);
}

}  // namespace tbr
