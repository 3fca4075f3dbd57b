#include "lelab/state.hpp"

#include "lelab/kernels.hpp"

namespace lelab {

namespace {

// out += a*b and out -= a*b on whole fields
void acc_mul(ScalarField& out, const ScalarField& a, const ScalarField& b) {
    kernels::ops().mul_acc(out.data(), a.data(), b.data(), out.size());
}
void sub_mul(ScalarField& out, const ScalarField& a, const ScalarField& b) {
    kernels::ops().mul_sub(out.data(), a.data(), b.data(), out.size());
}

}  // namespace

Tensor33 grad_tensor(const VectorField& w) {
    Tensor33 t;
    for (int j = 0; j < 3; ++j) {
        VectorField g = gradient(w.c[j]);
        for (int i = 0; i < 3; ++i) t.m[i][j] = std::move(g.c[i]);
    }
    return t;
}

Tensor33 grad_eta_from_displacement(const VectorField& eta_disp) {
    Tensor33 t = grad_tensor(eta_disp);
    const ScalarField one(eta_disp.grid_ptr(), 1.0);
    for (int i = 0; i < 3; ++i) t.m[i][i] += one;
    return t;
}

Tensor33 cofactor(const Tensor33& g) {
    // a_{ij} = (1/2) eps_{imn} eps_{jkl} g_{mk} g_{nl}
    //        = g_{i+1,j+1} g_{i+2,j+2} - g_{i+1,j+2} g_{i+2,j+1}  (cyclic)
    Tensor33 a;
    for (int i = 0; i < 3; ++i) {
        const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        for (int j = 0; j < 3; ++j) {
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            a.m[i][j] = multiply(g.m[i1][j1], g.m[i2][j2]);
            sub_mul(a.m[i][j], g.m[i1][j2], g.m[i2][j1]);
        }
    }
    return a;
}

ScalarField jacobian_det(const Tensor33& g) {
    ScalarField minor0 = multiply(g.m[1][1], g.m[2][2]);
    sub_mul(minor0, g.m[1][2], g.m[2][1]);
    ScalarField minor1 = multiply(g.m[1][0], g.m[2][2]);
    sub_mul(minor1, g.m[1][2], g.m[2][0]);
    ScalarField minor2 = multiply(g.m[1][0], g.m[2][1]);
    sub_mul(minor2, g.m[1][1], g.m[2][0]);
    ScalarField det = multiply(g.m[0][0], minor0);
    sub_mul(det, g.m[0][1], minor1);
    acc_mul(det, g.m[0][2], minor2);
    return det;
}

Tensor33 cofactor_rate(const Tensor33& h, const Tensor33& gv) {
    Tensor33 r;
    for (int i = 0; i < 3; ++i) {
        const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        for (int j = 0; j < 3; ++j) {
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            ScalarField e = multiply(gv.m[i1][j1], h.m[i2][j2]);
            acc_mul(e, h.m[i1][j1], gv.m[i2][j2]);
            sub_mul(e, gv.m[i1][j2], h.m[i2][j1]);
            sub_mul(e, h.m[i1][j2], gv.m[i2][j1]);
            r.m[i][j] = std::move(e);
        }
    }
    return r;
}

Tensor33 identity_minus(const Tensor33& t) {
    Tensor33 r;
    const ScalarField one(t.grid_ptr(), 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.m[i][j] = (i == j) ? one - t.m[i][j] : -1.0 * t.m[i][j];
    return r;
}

Tensor33 mat_times_own_transpose(const Tensor33& t) {
    Tensor33 r;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            ScalarField e = multiply(t.m[j][0], t.m[k][0]);
            acc_mul(e, t.m[j][1], t.m[k][1]);
            acc_mul(e, t.m[j][2], t.m[k][2]);
            r.m[j][k] = std::move(e);
        }
    return r;
}

VectorField contract_first(const Tensor33& t, const VectorField& g) {
    VectorField out;
    for (int i = 0; i < 3; ++i) {
        ScalarField e = multiply(t.m[0][i], g.c[0]);
        acc_mul(e, t.m[1][i], g.c[1]);
        acc_mul(e, t.m[2][i], g.c[2]);
        out.c[i] = std::move(e);
    }
    return out;
}

ScalarField double_contract(const Tensor33& a, const Tensor33& b) {
    ScalarField e = multiply(a.m[0][0], b.m[0][0]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != 0 || j != 0) acc_mul(e, a.m[i][j], b.m[i][j]);
    return e;
}

VectorField piola_residual(const Tensor33& t) {
    VectorField out;
    for (int i = 0; i < 3; ++i) {
        ScalarField e = tangential_derivative(t.m[0][i], 1);
        e += tangential_derivative(t.m[1][i], 2);
        e += vertical_derivative(t.m[2][i]);
        out.c[i] = std::move(e);
    }
    return out;
}

double tensor_l2(const Tensor33& t) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double n = l2_norm(t.m[i][j]);
            acc += n * n;
        }
    return std::sqrt(acc);
}

double tensor_max_abs(const Tensor33& t) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, max_abs(t.m[i][j]));
    return m;
}

LagrangianState assemble_state(double t, VectorField eta_disp, VectorField v, ScalarField q,
                               VectorField omega0) {
    LagrangianState s;
    s.t = t;
    s.eta_disp = std::move(eta_disp);
    s.v = std::move(v);
    s.q = std::move(q);
    s.omega0 = std::move(omega0);
    s.grad_eta = grad_eta_from_displacement(s.eta_disp);
    s.a = cofactor(s.grad_eta);
    return s;
}

VectorField cauchy_invariance_residual(const LagrangianState& s) {
    const Tensor33 gv = grad_tensor(s.v);
    VectorField r;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        ScalarField e = multiply(gv.m[j][0], s.grad_eta.m[k][0]);
        acc_mul(e, gv.m[j][1], s.grad_eta.m[k][1]);
        acc_mul(e, gv.m[j][2], s.grad_eta.m[k][2]);
        sub_mul(e, gv.m[k][0], s.grad_eta.m[j][0]);
        sub_mul(e, gv.m[k][1], s.grad_eta.m[j][1]);
        sub_mul(e, gv.m[k][2], s.grad_eta.m[j][2]);
        e -= s.omega0.c[i];
        r.c[i] = std::move(e);
    }
    return r;
}

ScalarField lagrangian_divergence(const LagrangianState& s) {
    return double_contract(s.a, grad_tensor(s.v));
}

VectorField curl_identity_residual(const LagrangianState& s) {
    const Tensor33 gv = grad_tensor(s.v);
    const Tensor33 dev = identity_minus(s.grad_eta);  // delta_km - d_k eta_m
    VectorField w = curl(s.v);
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        // subtract eps_{ijk} (delta_{km} - d_k eta_m) d_j v_m and omega0
        sub_mul(w.c[i], gv.m[j][0], dev.m[k][0]);
        sub_mul(w.c[i], gv.m[j][1], dev.m[k][1]);
        sub_mul(w.c[i], gv.m[j][2], dev.m[k][2]);
        acc_mul(w.c[i], gv.m[k][0], dev.m[j][0]);
        acc_mul(w.c[i], gv.m[k][1], dev.m[j][1]);
        acc_mul(w.c[i], gv.m[k][2], dev.m[j][2]);
        w.c[i] -= s.omega0.c[i];
    }
    return w;
}

}  // namespace lelab
