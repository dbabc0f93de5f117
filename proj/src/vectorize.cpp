#include "liolab/vectorize.hpp"

#include <cmath>
#include <string>

#include "liolab/densec.hpp"

namespace liolab {

void OpenSystem::validate() const {
    require_square(hamiltonian, "OpenSystem hamiltonian");
    require_finite(hamiltonian, "OpenSystem hamiltonian");
    const std::size_t n = dim();
    for (std::size_t k = 0; k < channels.size(); ++k) {
        const auto& ch = channels[k];
        if (!(ch.rate >= 0.0) || !std::isfinite(ch.rate)) {
            throw std::invalid_argument("OpenSystem channel " + std::to_string(k) +
                                        ": rate must be finite and >= 0");
        }
        if (ch.op.rows() != n || ch.op.cols() != n) {
            throw DimensionError("OpenSystem channel " + std::to_string(k) + ": operator is " +
                                 std::to_string(ch.op.rows()) + "x" + std::to_string(ch.op.cols()) +
                                 ", system dimension is " + std::to_string(n));
        }
        require_finite(ch.op, "OpenSystem channel " + std::to_string(k));
    }
}

CVector vec_row(const CMatrix& rho) {
    require_square(rho, "vec_row");
    const auto d = rho.data();
    return {d.begin(), d.end()};
}

CMatrix unvec_row(std::span<const Complex> v) {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (n * n != v.size()) {
        throw DimensionError("unvec_row: length " + std::to_string(v.size()) +
                             " is not a perfect square");
    }
    return CMatrix(n, n, std::vector<Complex>(v.begin(), v.end()));
}

Liouvillian build_liouvillian(const OpenSystem& sys) {
    sys.validate();
    const std::size_t n = sys.dim();
    const CMatrix id = CMatrix::identity(n);
    const CMatrix& h = sys.hamiltonian;

    CMatrix l = kron(h, id) - kron(id, h.conj());
    for (const auto& ch : sys.channels) {
        if (ch.rate == 0.0) continue;
        const CMatrix& c = ch.op;
        const CMatrix cdc = c.adjoint() * c;
        CMatrix d = kron(c, c.conj());
        d -= Complex(0.5) * kron(cdc, id);
        d -= Complex(0.5) * kron(id, cdc.conj());
        l += Complex(0.0, ch.rate) * d;
    }
    return Liouvillian{n, std::move(l)};
}

CMatrix rhs_direct(const OpenSystem& sys, const CMatrix& rho) {
    sys.validate();
    if (rho.rows() != sys.dim() || rho.cols() != sys.dim()) {
        throw DimensionError("rhs_direct: rho is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", system dimension is " +
                             std::to_string(sys.dim()));
    }
    const CMatrix& h = sys.hamiltonian;
    CMatrix out = Complex(0.0, -1.0) * (h * rho - rho * h.adjoint());
    for (const auto& ch : sys.channels) {
        if (ch.rate == 0.0) continue;
        const CMatrix& c = ch.op;
        const CMatrix cd = c.adjoint();
        const CMatrix cdc = cd * c;
        CMatrix d = c * rho * cd;
        d -= Complex(0.5) * (cdc * rho);
        d -= Complex(0.5) * (rho * cdc);
        out += Complex(ch.rate) * d;
    }
    return out;
}

}  // namespace liolab
