#include "nlemb/model_io.hpp"

#include "nlemb/errors.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>

namespace nlemb {

namespace {

constexpr char kModelMagic[4] = {'N', 'L', 'E', 'M'};
constexpr unsigned char kModelVersion = 0x01;

enum ModelKind : unsigned char { kLinear = 0, kNonlinear = 1, kKernelized = 2, kPca = 3 };

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<unsigned char, 8> buf;
    for (int i = 0; i < 8; ++i) {
        buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), 8);
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> buf;
    in.read(reinterpret_cast<char*>(buf.data()), 8);
    if (!in) {
        throw CorruptPayload("model file: truncated");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    }
    return v;
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

double get_f64(std::istream& in) {
    const std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

void put_token(std::ostream& out, const std::string& token) {
    out.put(static_cast<char>(token.size()));
    out.write(token.data(), static_cast<std::streamsize>(token.size()));
}

std::string get_token(std::istream& in) {
    const int len = in.get();
    if (len < 0) {
        throw CorruptPayload("model file: truncated kernel token");
    }
    std::string token(static_cast<std::size_t>(len), '\0');
    in.read(token.data(), len);
    if (!in) {
        throw CorruptPayload("model file: truncated kernel token");
    }
    return token;
}

void put_matrix(std::ostream& out, const Matrix& m) {
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            put_f64(out, m(r, c));
        }
    }
}

Matrix get_matrix(std::istream& in, Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = get_f64(in);
        }
    }
    return m;
}

Index checked_index(std::uint64_t v, const char* what) {
    if (v == 0 || v > (1ull << 40)) {
        throw CorruptPayload(std::string("model file: implausible ") + what + " = " +
                             std::to_string(v));
    }
    return static_cast<Index>(v);
}

}  // namespace

void save_model(const AnyModel& model, std::ostream& out) {
    out.write(kModelMagic, 4);
    out.put(static_cast<char>(kModelVersion));

    if (const auto* m = std::get_if<LinearModel>(&model)) {
        out.put(static_cast<char>(kLinear));
        put_token(out, "none");
        put_u64(out, static_cast<std::uint64_t>(m->dim()));
        put_u64(out, static_cast<std::uint64_t>(m->input_dim()));
        put_f64(out, m->bias);
        put_f64(out, m->margin);
        put_matrix(out, m->projection);
    } else if (const auto* m = std::get_if<NonlinearModel>(&model)) {
        out.put(static_cast<char>(kNonlinear));
        put_token(out, kernel_token(m->kernel));
        put_u64(out, static_cast<std::uint64_t>(m->dim()));
        put_u64(out, static_cast<std::uint64_t>(m->input_dim()));
        put_f64(out, m->bias);
        put_f64(out, m->margin);
        put_matrix(out, m->landmarks);
    } else if (const auto* m = std::get_if<KernelizedModel>(&model)) {
        out.put(static_cast<char>(kKernelized));
        put_token(out, kernel_token(m->kernel));
        put_u64(out, static_cast<std::uint64_t>(m->dim()));
        put_u64(out, static_cast<std::uint64_t>(m->input_dim()));
        put_u64(out, static_cast<std::uint64_t>(m->anchor_count()));
        put_f64(out, m->bias);
        put_f64(out, m->margin);
        put_matrix(out, m->coefficients);
        put_matrix(out, m->anchors);
    } else {
        const auto& m = std::get<PcaModel>(model);
        out.put(static_cast<char>(kPca));
        put_token(out, "none");
        put_u64(out, static_cast<std::uint64_t>(m.dim()));
        put_u64(out, static_cast<std::uint64_t>(m.input_dim()));
        put_f64(out, 0.0);  // bias, unused for pca
        put_f64(out, 0.0);  // margin, unused for pca
        put_matrix(out, m.components);
        for (Index c = 0; c < m.mean.size(); ++c) {
            put_f64(out, m.mean[c]);
        }
        for (Index c = 0; c < m.explained_variance.size(); ++c) {
            put_f64(out, m.explained_variance[c]);
        }
        put_u64(out, static_cast<std::uint64_t>(m.rank));
    }
    if (!out) {
        throw IoError("model write failed");
    }
}

void save_model(const AnyModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    save_model(model, out);
}

AnyModel load_model(std::istream& in) {
    char magic[4] = {};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kModelMagic, 4) != 0) {
        throw BadMagic("not a model file");
    }
    const int version = in.get();
    if (version != kModelVersion) {
        throw UnsupportedVersion("model file version " + std::to_string(version));
    }
    const int kind = in.get();
    const std::string token = get_token(in);

    if (kind == kLinear) {
        LinearModel m;
        const Index d = checked_index(get_u64(in), "d");
        const Index dim = checked_index(get_u64(in), "D");
        m.bias = get_f64(in);
        m.margin = get_f64(in);
        m.projection = get_matrix(in, d, dim);
        return m;
    }
    if (kind == kNonlinear) {
        NonlinearModel m;
        m.kernel = kernel_from_token(token);
        const Index d = checked_index(get_u64(in), "d");
        const Index dim = checked_index(get_u64(in), "D");
        m.bias = get_f64(in);
        m.margin = get_f64(in);
        m.landmarks = get_matrix(in, d, dim);
        return m;
    }
    if (kind == kKernelized) {
        KernelizedModel m;
        m.kernel = kernel_from_token(token);
        const Index d = checked_index(get_u64(in), "d");
        const Index dim = checked_index(get_u64(in), "D");
        const Index n = checked_index(get_u64(in), "N");
        m.bias = get_f64(in);
        m.margin = get_f64(in);
        m.coefficients = get_matrix(in, d, n);
        m.anchors = get_matrix(in, n, dim);
        return m;
    }
    if (kind == kPca) {
        PcaModel m;
        const Index d = checked_index(get_u64(in), "d");
        const Index dim = checked_index(get_u64(in), "D");
        get_f64(in);
        get_f64(in);
        m.components = get_matrix(in, d, dim);
        m.mean.resize(dim);
        for (Index c = 0; c < dim; ++c) {
            m.mean[c] = get_f64(in);
        }
        m.explained_variance.resize(d);
        for (Index c = 0; c < d; ++c) {
            m.explained_variance[c] = get_f64(in);
        }
        m.rank = static_cast<Index>(get_u64(in));
        return m;
    }
    throw CorruptPayload("model file: unknown model kind " + std::to_string(kind));
}

AnyModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    return load_model(in);
}

}  // namespace nlemb
