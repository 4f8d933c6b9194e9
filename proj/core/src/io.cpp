#include "nlemb/io.hpp"

#include "nlemb/errors.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace nlemb {

namespace {

constexpr char kFeatureMagic[4] = {'F', 'M', 'A', 'T'};
constexpr unsigned char kFeatureVersion = 0x01;

void put_u64_le(std::ostream& out, std::uint64_t v) {
    std::array<unsigned char, 8> buf;
    for (int i = 0; i < 8; ++i) {
        buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), 8);
}

std::uint64_t get_u64_le(std::istream& in) {
    std::array<unsigned char, 8> buf;
    in.read(reinterpret_cast<char*>(buf.data()), 8);
    if (!in) {
        throw CorruptPayload("feature file: truncated header");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    }
    return v;
}

void put_f32_le(std::ostream& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    std::array<unsigned char, 4> buf;
    for (int i = 0; i < 4; ++i) {
        buf[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), 4);
}

void require_finite(const Matrix& values, const std::string& what) {
    if (!values.allFinite()) {
        throw ValidationError(what + ": non-finite entry");
    }
}

// Declared normalization is lost through the float32 container; recover it
// when a load is numerically unambiguous so validation downstream can rely on
// the state flag. Snapping re-divides, so the row then satisfies the tight
// in-memory tolerance, not just the loose detection one.
void detect_norm_state(FeatureMatrix& m) {
    const double tol = 1e-6;
    bool all_l1 = true;
    bool all_l2 = true;
    for (Index r = 0; r < m.rows() && (all_l1 || all_l2); ++r) {
        if (all_l1) {
            double sum = 0.0;
            for (Index c = 0; c < m.dims(); ++c) {
                const double v = m.values(r, c);
                if (v < 0.0) {
                    all_l1 = false;
                    break;
                }
                sum += v;
            }
            if (all_l1 && std::abs(sum - 1.0) > tol) {
                all_l1 = false;
            }
        }
        if (all_l2 && std::abs(m.values.row(r).norm() - 1.0) > tol) {
            all_l2 = false;
        }
    }
    if (all_l1) {
        for (Index r = 0; r < m.rows(); ++r) {
            m.values.row(r) /= m.values.row(r).sum();
        }
        m.norm_state = NormState::l1;
    } else if (all_l2) {
        for (Index r = 0; r < m.rows(); ++r) {
            m.values.row(r) /= m.values.row(r).norm();
        }
        m.norm_state = NormState::l2;
    } else {
        m.norm_state = NormState::raw;
    }
}

}  // namespace

void save_features_binary(const std::string& path, const FeatureMatrix& m) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out.write(kFeatureMagic, 4);
    out.put(static_cast<char>(kFeatureVersion));
    put_u64_le(out, static_cast<std::uint64_t>(m.rows()));
    put_u64_le(out, static_cast<std::uint64_t>(m.dims()));
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.dims(); ++c) {
            put_f32_le(out, static_cast<float>(m.values(r, c)));
        }
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

FeatureMatrix load_features_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    char magic[4] = {};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kFeatureMagic, 4) != 0) {
        throw BadMagic("not a feature file: " + path);
    }
    const int version = in.get();
    if (version != kFeatureVersion) {
        throw UnsupportedVersion("feature file version " + std::to_string(version));
    }
    const std::uint64_t n = get_u64_le(in);
    const std::uint64_t d = get_u64_le(in);
    if (n == 0 || d == 0) {
        throw CorruptPayload("feature file: empty dimensions");
    }

    FeatureMatrix m;
    m.values.resize(static_cast<Index>(n), static_cast<Index>(d));
    std::vector<unsigned char> rowbuf(d * 4);
    for (std::uint64_t r = 0; r < n; ++r) {
        in.read(reinterpret_cast<char*>(rowbuf.data()), static_cast<std::streamsize>(rowbuf.size()));
        if (!in) {
            throw CorruptPayload("feature file: truncated payload at row " + std::to_string(r));
        }
        for (std::uint64_t c = 0; c < d; ++c) {
            std::uint32_t bits = 0;
            for (int i = 0; i < 4; ++i) {
                bits |= static_cast<std::uint32_t>(rowbuf[c * 4 + i]) << (8 * i);
            }
            float v;
            std::memcpy(&v, &bits, 4);
            m.values(static_cast<Index>(r), static_cast<Index>(c)) = static_cast<double>(v);
        }
    }
    require_finite(m.values, "feature file " + path);
    return m;
}

FeatureMatrix load_features_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ValidationError(path + ":" + std::to_string(lineno) +
                                      ": cannot parse value '" + cell + "'");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": ragged row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) {
        throw ValidationError(path + ": no data");
    }
    FeatureMatrix m;
    m.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m.values(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
        }
    }
    require_finite(m.values, "feature file " + path);
    return m;
}

FeatureMatrix load_features(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) {
        throw IoError("cannot open: " + path);
    }
    char magic[4] = {};
    probe.read(magic, 4);
    probe.close();
    FeatureMatrix m = (probe.gcount() == 4 && std::memcmp(magic, kFeatureMagic, 4) == 0)
                          ? load_features_binary(path)
                          : load_features_csv(path);
    detect_norm_state(m);
    return m;
}

LabelVector load_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    LabelVector labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        try {
            const long long v = std::stoll(line);
            if (v < 0) {
                throw ValidationError("");
            }
            labels.push_back(static_cast<Label>(v));
        } catch (const std::exception&) {
            throw ValidationError(path + ":" + std::to_string(lineno) +
                                  ": labels must be non-negative integers");
        }
    }
    if (labels.empty()) {
        throw ValidationError(path + ": no labels");
    }
    return labels;
}

void save_labels(const std::string& path, const LabelVector& labels) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    for (const Label l : labels) {
        out << l << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

PairSet load_pairs(const std::string& path, Index num_rows) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    PairSet out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        long long i = 0;
        long long j = 0;
        int y = 0;
        if (!(ss >> i >> j >> y) || (y != 1 && y != -1)) {
            throw ValidationError(path + ":" + std::to_string(lineno) +
                                  ": expected 'i j y' with y in {-1, 1}");
        }
        if (i == j || i < 0 || j < 0 || i >= num_rows || j >= num_rows) {
            throw ValidationError(path + ":" + std::to_string(lineno) +
                                  ": pair indices out of range or equal");
        }
        out.pairs.push_back({static_cast<Index>(i), static_cast<Index>(j), y});
        if (y == 1) {
            ++out.pos_count;
        } else {
            ++out.neg_count;
        }
    }
    return out;
}

void save_pairs(const std::string& path, const PairSet& pairs) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    for (const auto& p : pairs.pairs) {
        out << p.i << ' ' << p.j << ' ' << p.y << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

}  // namespace nlemb
