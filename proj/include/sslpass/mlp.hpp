#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sslpass/features.hpp"

namespace sslpass {

/// Fully connected scorer mapping a feature vector to a scalar value.
/// Hidden layers are rectified-linear, the output layer is identity.
/// Layout: weights[l] is sizes[l+1] x sizes[l] row-major, biases[l] has
/// sizes[l+1] entries.
struct QScorer {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;

    static QScorer zeros(std::vector<std::size_t> layer_sizes) {
        QScorer q;
        q.sizes = std::move(layer_sizes);
        q.check_shape();
        for (std::size_t l = 0; l + 1 < q.sizes.size(); ++l) {
            q.weights.emplace_back(q.sizes[l + 1] * q.sizes[l], 0.0);
            q.biases.emplace_back(q.sizes[l + 1], 0.0);
        }
        return q;
    }

    /// Uniform(+-sqrt(6/(fan_in+fan_out))) weights, zero biases.
    static QScorer glorot(std::vector<std::size_t> layer_sizes, std::mt19937_64& rng) {
        QScorer q = zeros(std::move(layer_sizes));
        for (std::size_t l = 0; l + 1 < q.sizes.size(); ++l) {
            const double bound =
                std::sqrt(6.0 / static_cast<double>(q.sizes[l] + q.sizes[l + 1]));
            std::uniform_real_distribution<double> dist(-bound, bound);
            for (double& w : q.weights[l]) w = dist(rng);
        }
        return q;
    }

    std::size_t layer_count() const { return weights.size(); }

    void check_shape() const {
        if (sizes.size() < 2) throw std::invalid_argument("QScorer: need at least two layers");
        for (std::size_t s : sizes)
            if (s == 0) throw std::invalid_argument("QScorer: zero-width layer");
        if (sizes.front() != FeatureVector::kDim)
            throw std::invalid_argument("QScorer: input width must match the feature dimension");
        if (sizes.back() != 1) throw std::invalid_argument("QScorer: output width must be 1");
    }

    void validate() const {
        check_shape();
        if (weights.size() != sizes.size() - 1 || biases.size() != sizes.size() - 1)
            throw std::invalid_argument("QScorer: layer count mismatch");
        for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
            if (weights[l].size() != sizes[l + 1] * sizes[l] || biases[l].size() != sizes[l + 1])
                throw std::invalid_argument("QScorer: tensor shape mismatch");
            for (double w : weights[l])
                if (!std::isfinite(w)) throw std::invalid_argument("QScorer: non-finite weight");
            for (double b : biases[l])
                if (!std::isfinite(b)) throw std::invalid_argument("QScorer: non-finite bias");
        }
    }

    double score(const FeatureVector& x) const {
        const auto input = x.to_array();
        std::vector<double> a(input.begin(), input.end());
        std::vector<double> next;
        for (std::size_t l = 0; l < layer_count(); ++l) {
            const bool hidden = l + 1 < layer_count();
            next.assign(sizes[l + 1], 0.0);
            for (std::size_t j = 0; j < sizes[l + 1]; ++j) {
                double z = biases[l][j];
                const double* row = &weights[l][j * sizes[l]];
                for (std::size_t i = 0; i < sizes[l]; ++i) z += row[i] * a[i];
                next[j] = hidden ? std::max(0.0, z) : z;
            }
            a.swap(next);
        }
        return a[0];
    }

    struct Gradients {
        std::vector<std::vector<double>> weights;
        std::vector<std::vector<double>> biases;

        static Gradients zeros_like(const QScorer& q) {
            Gradients g;
            for (std::size_t l = 0; l < q.layer_count(); ++l) {
                g.weights.emplace_back(q.weights[l].size(), 0.0);
                g.biases.emplace_back(q.biases[l].size(), 0.0);
            }
            return g;
        }

        void scale(double s) {
            for (auto& t : weights)
                for (double& v : t) v *= s;
            for (auto& t : biases)
                for (double& v : t) v *= s;
        }
    };

    /// Half squared error against `target`; gradients are accumulated into
    /// `grad` by reverse accumulation. Returns the loss.
    double forward_backward(const FeatureVector& x, double target, Gradients& grad) const {
        std::vector<std::vector<double>> acts;  // post-activation per layer
        std::vector<std::vector<double>> zs;    // pre-activation per layer
        const auto input = x.to_array();
        acts.emplace_back(input.begin(), input.end());
        for (std::size_t l = 0; l < layer_count(); ++l) {
            const bool hidden = l + 1 < layer_count();
            std::vector<double> z(sizes[l + 1]);
            std::vector<double> a(sizes[l + 1]);
            for (std::size_t j = 0; j < sizes[l + 1]; ++j) {
                double sum = biases[l][j];
                const double* row = &weights[l][j * sizes[l]];
                for (std::size_t i = 0; i < sizes[l]; ++i) sum += row[i] * acts[l][i];
                z[j] = sum;
                a[j] = hidden ? std::max(0.0, sum) : sum;
            }
            zs.push_back(std::move(z));
            acts.push_back(std::move(a));
        }

        const double error = acts.back()[0] - target;
        std::vector<double> delta{error};  // d(0.5 e^2)/dz at the output
        for (std::size_t li = layer_count(); li-- > 0;) {
            for (std::size_t j = 0; j < sizes[li + 1]; ++j) {
                grad.biases[li][j] += delta[j];
                double* grow = &grad.weights[li][j * sizes[li]];
                for (std::size_t i = 0; i < sizes[li]; ++i) grow[i] += delta[j] * acts[li][i];
            }
            if (li == 0) break;
            std::vector<double> prev(sizes[li], 0.0);
            for (std::size_t j = 0; j < sizes[li + 1]; ++j) {
                const double* row = &weights[li][j * sizes[li]];
                for (std::size_t i = 0; i < sizes[li]; ++i) prev[i] += row[i] * delta[j];
            }
            for (std::size_t i = 0; i < sizes[li]; ++i)
                if (zs[li - 1][i] <= 0.0) prev[i] = 0.0;
            delta.swap(prev);
        }
        return 0.5 * error * error;
    }

    void apply_step(const Gradients& grad, double lr, bool update_biases = true) {
        for (std::size_t l = 0; l < layer_count(); ++l) {
            for (std::size_t i = 0; i < weights[l].size(); ++i)
                weights[l][i] -= lr * grad.weights[l][i];
            if (update_biases)
                for (std::size_t i = 0; i < biases[l].size(); ++i)
                    biases[l][i] -= lr * grad.biases[l][i];
        }
    }
};

// --- weight persistence -----------------------------------------------------
//
// Binary format v1, little-endian: magic "QPW1", uint32 layer-size count,
// uint32 sizes, then per layer the row-major weight matrix followed by the
// bias vector, all 64-bit floats.

inline void write_qscorer(std::ostream& out, const QScorer& q) {
    q.validate();
    out.write("QPW1", 4);
    auto put_u32 = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    put_u32(static_cast<std::uint32_t>(q.sizes.size()));
    for (std::size_t s : q.sizes) put_u32(static_cast<std::uint32_t>(s));
    auto put_doubles = [&](const std::vector<double>& v) {
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(double)));
    };
    for (std::size_t l = 0; l < q.layer_count(); ++l) {
        put_doubles(q.weights[l]);
        put_doubles(q.biases[l]);
    }
}

inline void save_qscorer(const std::string& path, const QScorer& q) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open weight file for writing: " + path);
    write_qscorer(out, q);
}

inline QScorer read_qscorer(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "QPW1", 4) != 0)
        throw std::runtime_error("weight file: bad magic (expected QPW1)");
    auto get_u32 = [&]() {
        std::uint32_t v = 0;
        in.read(reinterpret_cast<char*>(&v), 4);
        if (!in) throw std::runtime_error("weight file: truncated header");
        return v;
    };
    const std::uint32_t n = get_u32();
    if (n < 2 || n > 64) throw std::runtime_error("weight file: implausible layer count");
    std::vector<std::size_t> sizes(n);
    for (auto& s : sizes) {
        s = get_u32();
        if (s == 0 || s > 1'000'000) throw std::runtime_error("weight file: implausible layer size");
    }
    QScorer q = QScorer::zeros(std::move(sizes));
    auto get_doubles = [&](std::vector<double>& v) {
        in.read(reinterpret_cast<char*>(v.data()),
                static_cast<std::streamsize>(v.size() * sizeof(double)));
        if (!in) throw std::runtime_error("weight file: truncated tensor data");
    };
    for (std::size_t l = 0; l < q.layer_count(); ++l) {
        get_doubles(q.weights[l]);
        get_doubles(q.biases[l]);
    }
    q.validate();
    return q;
}

inline QScorer load_qscorer(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open weight file: " + path);
    return read_qscorer(in);
}

/// Text mirror of the binary format, one tensor per line, for diffing.
inline void export_qscorer_text(std::ostream& out, const QScorer& q) {
    out << "qpw 1\nsizes:";
    for (std::size_t s : q.sizes) out << ' ' << s;
    out << '\n';
    char buf[64];
    auto put_line = [&](const char* tag, std::size_t l, const std::vector<double>& v) {
        out << tag << l << ':';
        for (double d : v) {
            std::snprintf(buf, sizeof buf, " %.17g", d);
            out << buf;
        }
        out << '\n';
    };
    for (std::size_t l = 0; l < q.layer_count(); ++l) {
        put_line("W", l, q.weights[l]);
        put_line("b", l, q.biases[l]);
    }
}

}  // namespace sslpass
