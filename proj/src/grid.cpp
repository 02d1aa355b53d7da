#include "rfl/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rfl/parallel.hpp"

namespace rfl {

GridSpec::GridSpec(std::vector<int> sizes, std::vector<double> spacing)
    : sizes_(std::move(sizes)), spacing_(std::move(spacing)) {
    if (sizes_.empty() || sizes_.size() != spacing_.size()) {
        throw std::invalid_argument("GridSpec: sizes and spacing must be non-empty and equally long");
    }
    if (static_cast<int>(sizes_.size()) > AlgebraSignature::kMaxGenerators) {
        throw std::invalid_argument("GridSpec: dimension exceeds the generator cap");
    }
    points_ = 1;
    for (std::size_t j = 0; j < sizes_.size(); ++j) {
        if (sizes_[j] < 4 || sizes_[j] % 2 != 0) {
            throw std::invalid_argument("GridSpec: axis " + std::to_string(j) +
                                        " needs an even sample count >= 4, got " +
                                        std::to_string(sizes_[j]));
        }
        if (!(spacing_[j] > 0.0) || !std::isfinite(spacing_[j])) {
            throw std::invalid_argument("GridSpec: axis " + std::to_string(j) +
                                        " needs a positive finite spacing");
        }
        points_ *= static_cast<std::size_t>(sizes_[j]);
    }
}

GridSpec GridSpec::uniform(int n, int samples, double spacing) {
    if (n < 1) throw std::invalid_argument("GridSpec: dimension must be >= 1");
    return GridSpec(std::vector<int>(static_cast<std::size_t>(n), samples),
                    std::vector<double>(static_cast<std::size_t>(n), spacing));
}

double GridSpec::cell_volume() const noexcept {
    double v = 1.0;
    for (double h : spacing_) v *= h;
    return v;
}

double GridSpec::frequency_cell_volume() const noexcept {
    double v = 1.0;
    for (int j = 0; j < n(); ++j) v *= frequency_step(j);
    return v;
}

double GridSpec::max_frequency_step() const noexcept {
    double m = 0.0;
    for (int j = 0; j < n(); ++j) m = std::max(m, frequency_step(j));
    return m;
}

double GridSpec::nyquist_radius() const noexcept {
    double r = std::numeric_limits<double>::infinity();
    for (double h : spacing_) r = std::min(r, M_PI / h);
    return r;
}

void GridSpec::multi_index(std::size_t linear, std::span<int> out) const {
    for (int j = n() - 1; j >= 0; --j) {
        const auto nj = static_cast<std::size_t>(sizes_[j]);
        out[j] = static_cast<int>(linear % nj);
        linear /= nj;
    }
}

std::size_t GridSpec::linear_index(std::span<const int> index) const {
    std::size_t linear = 0;
    for (int j = 0; j < n(); ++j) {
        linear = linear * static_cast<std::size_t>(sizes_[j]) + static_cast<std::size_t>(index[j]);
    }
    return linear;
}

void GridSpec::coordinates(std::size_t linear, std::span<double> x) const {
    for (int j = n() - 1; j >= 0; --j) {
        const auto nj = static_cast<std::size_t>(sizes_[j]);
        const auto k = static_cast<long>(linear % nj);
        linear /= nj;
        x[j] = static_cast<double>(k - sizes_[j] / 2) * spacing_[j];
    }
}

void GridSpec::frequencies(std::size_t linear, std::span<double> xi) const {
    for (int j = n() - 1; j >= 0; --j) {
        const auto nj = static_cast<std::size_t>(sizes_[j]);
        const auto m = static_cast<long>(linear % nj);
        linear /= nj;
        xi[j] = static_cast<double>(m - sizes_[j] / 2) * frequency_step(j);
    }
}

// ---------------------------------------------------------------------------

template <Domain D>
Field<D>::Field(GridSpec grid, AlgebraSignature sig)
    : grid_(std::move(grid)), sig_(sig), data_(grid_.point_count() * sig.blade_count()) {
    if (grid_.n() != sig_.n()) {
        throw std::invalid_argument("Field: algebra generator count must equal the grid dimension");
    }
}

template <Domain D>
Field<D> Field<D>::from_function(const GridSpec& grid, AlgebraSignature sig,
                                 const std::function<Multivector(std::span<const double>)>& fn) {
    Field out(grid, sig);
    std::vector<double> x(static_cast<std::size_t>(grid.n()));
    for (std::size_t p = 0; p < grid.point_count(); ++p) {
        if constexpr (D == Domain::Space) {
            grid.coordinates(p, x);
        } else {
            grid.frequencies(p, x);
        }
        out.set(p, fn(x));
    }
    return out;
}

template <Domain D>
Multivector Field<D>::at(std::size_t point) const {
    Multivector v(sig_);
    const std::size_t stride = point_count();
    for (std::size_t a = 0; a < blade_count(); ++a) v[a] = data_[a * stride + point];
    return v;
}

template <Domain D>
void Field<D>::set(std::size_t point, const Multivector& value) {
    if (value.signature() != sig_) throw std::invalid_argument("Field::set: signature mismatch");
    const std::size_t stride = point_count();
    for (std::size_t a = 0; a < blade_count(); ++a) data_[a * stride + point] = value[a];
}

template <Domain D>
Field<D>& Field<D>::operator+=(const Field& rhs) {
    if (grid_ != rhs.grid_ || sig_ != rhs.sig_) throw std::invalid_argument("Field +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

template <Domain D>
Field<D>& Field<D>::operator-=(const Field& rhs) {
    if (grid_ != rhs.grid_ || sig_ != rhs.sig_) throw std::invalid_argument("Field -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

template <Domain D>
Field<D>& Field<D>::operator*=(Complex s) {
    for (auto& c : data_) c *= s;
    return *this;
}

template <Domain D>
double Field<D>::max_norm0() const {
    const std::size_t stride = point_count();
    double best = 0.0;
    for (std::size_t p = 0; p < stride; ++p) {
        double s = 0.0;
        for (std::size_t a = 0; a < blade_count(); ++a) s += std::norm(data_[a * stride + p]);
        best = std::max(best, s);
    }
    return std::sqrt(std::ldexp(best, sig_.n()));
}

template class Field<Domain::Space>;
template class Field<Domain::Frequency>;

// ---------------------------------------------------------------------------

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t count)
        : ptr(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count))) {
        if (ptr == nullptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(ptr); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* ptr;
};

// Shifting every axis by N/2 maps centered indices to FFT order and back.
std::vector<std::size_t> half_shift_table(const GridSpec& grid) {
    std::vector<std::size_t> table(grid.point_count());
    std::vector<int> idx(static_cast<std::size_t>(grid.n()));
    for (std::size_t p = 0; p < table.size(); ++p) {
        grid.multi_index(p, idx);
        for (int j = 0; j < grid.n(); ++j) idx[j] = (idx[j] + grid.sizes()[j] / 2) % grid.sizes()[j];
        table[p] = grid.linear_index(idx);
    }
    return table;
}

void transform(std::span<const Complex> in, std::span<Complex> out, const GridSpec& grid,
               std::size_t blades, int sign, double scale) {
    const std::size_t points = grid.point_count();
    const std::size_t total = points * blades;
    const auto shift = half_shift_table(grid);
    FftwBuffer buffer(total);
    std::vector<int> dims(grid.sizes());

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_many_dft(grid.n(), dims.data(), static_cast<int>(blades), buffer.ptr, nullptr,
                                  1, static_cast<int>(points), buffer.ptr, nullptr, 1,
                                  static_cast<int>(points), sign, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw std::runtime_error("FFTW planning failed");

    for (std::size_t a = 0; a < blades; ++a) {
        const std::size_t base = a * points;
        for (std::size_t p = 0; p < points; ++p) {
            const Complex v = in[base + p];
            buffer.ptr[base + shift[p]][0] = v.real();
            buffer.ptr[base + shift[p]][1] = v.imag();
        }
    }
    fftw_execute(plan);
    for (std::size_t a = 0; a < blades; ++a) {
        const std::size_t base = a * points;
        for (std::size_t p = 0; p < points; ++p) {
            const auto& c = buffer.ptr[base + shift[p]];
            out[base + p] = Complex(c[0], c[1]) * scale;
        }
    }
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace

SpectralField dft_forward(const CliffordField& f) {
    SpectralField out(f.grid(), f.signature());
    transform(f.data(), out.data(), f.grid(), f.blade_count(), FFTW_FORWARD, f.grid().cell_volume());
    return out;
}

CliffordField dft_inverse(const SpectralField& spectrum) {
    CliffordField out(spectrum.grid(), spectrum.signature());
    const GridSpec& g = spectrum.grid();
    const double scale = 1.0 / (static_cast<double>(g.point_count()) * g.cell_volume());
    transform(spectrum.data(), out.data(), g, spectrum.blade_count(), FFTW_BACKWARD, scale);
    return out;
}

SpectralField apply_symbol(const Symbol& symbol, const SpectralField& spectrum) {
    const GridSpec& g = spectrum.grid();
    SpectralField out(g, spectrum.signature());
    parallel_for(g.point_count(), [&](std::size_t begin, std::size_t end) {
        std::vector<double> xi(static_cast<std::size_t>(g.n()));
        for (std::size_t p = begin; p < end; ++p) {
            g.frequencies(p, xi);
            Multivector m(spectrum.signature());
            try {
                m = symbol(xi);
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << "symbol evaluation failed at frequency (";
                for (std::size_t j = 0; j < xi.size(); ++j) msg << (j ? ", " : "") << xi[j];
                msg << "): " << e.what();
                throw std::invalid_argument(msg.str());
            }
            out.set(p, m * spectrum.at(p));
        }
    });
    return out;
}

CliffordField apply_multiplier(const Symbol& symbol, const CliffordField& f) {
    return dft_inverse(apply_symbol(symbol, dft_forward(f)));
}

CliffordField left_multiply(const Multivector& lambda, const CliffordField& f) {
    CliffordField out(f.grid(), f.signature());
    for (std::size_t p = 0; p < f.point_count(); ++p) out.set(p, lambda * f.at(p));
    return out;
}

double lp_norm(const CliffordField& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    const std::size_t points = f.point_count();
    const std::size_t blades = f.blade_count();
    const double scale = std::ldexp(1.0, f.signature().n());
    std::vector<double> local(points);
    for (std::size_t q = 0; q < points; ++q) {
        double s = 0.0;
        for (std::size_t a = 0; a < blades; ++a) s += std::norm(f.data()[a * points + q]);
        local[q] = std::sqrt(scale * s);
    }
    if (std::isinf(p)) return local.empty() ? 0.0 : *std::max_element(local.begin(), local.end());
    const double peak = local.empty() ? 0.0 : *std::max_element(local.begin(), local.end());
    if (peak == 0.0) return 0.0;
    // Normalizing by the peak keeps |f|^p representable for large p.
    for (auto& v : local) v = std::pow(v / peak, p);
    const double sum = pairwise_sum(local.data(), local.size()) * f.grid().cell_volume();
    return peak * std::pow(sum, 1.0 / p);
}

double spectral_l2_norm(const SpectralField& spectrum) {
    const std::size_t points = spectrum.point_count();
    std::vector<double> local(points);
    for (std::size_t q = 0; q < points; ++q) {
        double s = 0.0;
        for (std::size_t a = 0; a < spectrum.blade_count(); ++a) {
            s += std::norm(spectrum.data()[a * points + q]);
        }
        local[q] = s;
    }
    const double sum = pairwise_sum(local.data(), local.size());
    return std::sqrt(std::ldexp(sum, spectrum.signature().n()) * spectrum.grid().frequency_cell_volume());
}

Complex field_pairing(const CliffordField& f, const CliffordField& g) {
    if (f.grid() != g.grid() || f.signature() != g.signature()) {
        throw std::invalid_argument("field_pairing: fields live on different grids");
    }
    const std::size_t points = f.point_count();
    std::vector<double> re(points), im(points);
    for (std::size_t q = 0; q < points; ++q) {
        Complex s{};
        for (BladeIndex a = 0; a < f.blade_count(); ++a) {
            // [conj(e_A) e_A]_0 = conjugation_sign(A) * sign(e_A e_A)
            const double sign = conjugation_sign(a) * blade_product(a, a).sign;
            s += sign * std::conj(f.data()[a * points + q]) * g.data()[a * points + q];
        }
        re[q] = s.real();
        im[q] = s.imag();
    }
    const double w = std::ldexp(f.grid().cell_volume(), f.signature().n());
    return Complex(pairwise_sum(re.data(), points), pairwise_sum(im.data(), points)) * w;
}

}  // namespace rfl
