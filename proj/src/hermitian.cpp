#include "hermdeg/hermitian.hpp"

namespace hermdeg::hermitian {

using poly::Mono;
using poly::PolyMatrix;

namespace {

std::vector<std::string> canonical_names(const char* prefix, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

// identity map of the ambient generators into a larger ring where the z-block
// starts at position offset
std::vector<int> block_map(int n, int offset) {
    auto m = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) m[size_t(i)] = offset + i;
    return m;
}

} // namespace

IdealQ singular_locus_ideal(const VarietySpec& V) {
    if (V.generators.empty()) throw input_error("singular_locus_ideal: variety has no implicit generators");
    IdealQ I{V.zring, V.generators};
    std::vector<int> vars(size_t(V.n));
    for (int i = 0; i < V.n; ++i) vars[size_t(i)] = i;
    PolyMatrix<GaussianRational> J = poly::jacobian(V.generators, vars);
    for (auto& mnr : poly::minors(J, V.codim))
        if (!mnr.is_zero()) I.gens.push_back(std::move(mnr));
    return I;
}

CriticalSystem build_critical_system(const VarietySpec& V, bool projective) {
    if (V.generators.empty())
        throw input_error("critical system needs implicit generators (use the parametrized route instead)");
    if (projective && !V.homogeneous) throw input_error("NotHomogeneous: projective critical ideal needs a cone");
    int n = V.n;
    CriticalSystem S;
    S.n = n;
    S.projective = projective;
    std::vector<std::string> names;
    for (auto& s : canonical_names("z", n)) names.push_back(s);
    for (auto& s : canonical_names("w", n)) names.push_back(s);
    for (auto& s : canonical_names("u", n)) names.push_back(s);
    for (auto& s : canonical_names("v", n)) names.push_back(s);
    S.ring = poly::make_ring(names);

    auto zmap = block_map(n, 0);
    std::vector<PolyQ> f;
    for (const auto& g : V.generators) f.push_back(poly::map_vars(g, S.ring, zmap));

    auto zvars = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) zvars[size_t(i)] = i;
    PolyMatrix<GaussianRational> J = poly::jacobian(f, zvars);

    // [v - w; J_z(f)] for the affine case, [v; w; J(f)] for cones
    PolyMatrix<GaussianRational> M;
    if (!projective) {
        std::vector<PolyQ> row;
        for (int k = 0; k < n; ++k)
            row.push_back(poly::sub(poly::make_varq(S.ring, S.vi(k)), poly::make_varq(S.ring, S.wi(k))));
        M.push_back(std::move(row));
    } else {
        std::vector<PolyQ> vrow, wrow;
        for (int k = 0; k < n; ++k) vrow.push_back(poly::make_varq(S.ring, S.vi(k)));
        for (int k = 0; k < n; ++k) wrow.push_back(poly::make_varq(S.ring, S.wi(k)));
        M.push_back(std::move(vrow));
        M.push_back(std::move(wrow));
    }
    for (auto& row : J) M.push_back(row);
    int k = V.codim + (projective ? 2 : 1);

    S.equations = f;
    std::vector<PolyQ> mnrs;
    if (k <= int(M.size()) && k <= n) mnrs = poly::minors(M, k);
    for (const auto& m : mnrs)
        if (!m.is_zero()) S.equations.push_back(m);
    size_t half = S.equations.size();
    for (size_t i = 0; i < half; ++i) S.equations.push_back(poly::star(S.equations[i]));

    IdealQ sing = singular_locus_ideal(V);
    for (const auto& g : sing.gens) {
        PolyQ h = poly::map_vars(g, S.ring, zmap);
        S.sing.push_back(h);
        S.sing_star.push_back(poly::star(h));
    }
    S.zw_real = poly::make_zero<GaussianRational>(S.ring);
    for (int i = 0; i < n; ++i)
        S.zw_real = poly::add(S.zw_real,
                              poly::mul(poly::make_varq(S.ring, S.zi(i)), poly::make_varq(S.ring, S.wi(i))));
    return S;
}

ideal::Ideal<GaussianRational> specialize_critical(const CriticalSystem& S, const QueryPoint& q,
                                                   std::vector<PolyQ>* sing_out,
                                                   std::vector<PolyQ>* sing_star_out, PolyQ* zw_out) {
    int n = S.n;
    if (int(q.u.size()) != n || int(q.v.size()) != n)
        throw input_error("query point has wrong dimension");
    std::vector<std::optional<GaussianRational>> vals(size_t(4 * n));
    for (int i = 0; i < n; ++i) {
        vals[size_t(S.ui(i))] = q.u[size_t(i)];
        vals[size_t(S.vi(i))] = q.v[size_t(i)];
    }
    std::vector<std::string> names;
    for (auto& s : canonical_names("z", n)) names.push_back(s);
    for (auto& s : canonical_names("w", n)) names.push_back(s);
    RingPtr zw = poly::make_ring(names);
    std::vector<int> proj(size_t(4 * n), -1);
    for (int i = 0; i < 2 * n; ++i) proj[size_t(i)] = i;

    ideal::Ideal<GaussianRational> out{zw, {}};
    for (const auto& f : S.equations) {
        PolyQ g = poly::map_vars(poly::substitute_values(f, vals), zw, proj);
        if (!g.is_zero()) out.gens.push_back(std::move(g));
    }
    auto carry = [&](const std::vector<PolyQ>& src, std::vector<PolyQ>* dst) {
        if (!dst) return;
        dst->clear();
        for (const auto& f : src) {
            PolyQ g = poly::map_vars(poly::substitute_values(f, vals), zw, proj);
            if (!g.is_zero()) dst->push_back(std::move(g));
        }
    };
    carry(S.sing, sing_out);
    carry(S.sing_star, sing_star_out);
    if (zw_out) *zw_out = poly::map_vars(S.zw_real, zw, proj);
    return out;
}

namespace {

IdealQ saturate_critical(ideal::Ideal<GaussianRational> I, const std::vector<PolyQ>& sing,
                         const std::vector<PolyQ>& sing_star, const PolyQ* zw, GBRun& run) {
    using ideal::Ideal;
    // saturation by the product ideal I_sing * (I_sing)* [* <z,w>_R] equals
    // the successive saturations by each factor ideal
    I = ideal::saturate_by_ideal(I, Ideal<GaussianRational>{I.ring, sing}, run);
    I = ideal::saturate_by_ideal(I, Ideal<GaussianRational>{I.ring, sing_star}, run);
    if (zw && !zw->is_constant()) I = ideal::saturate(I, *zw, run);
    return I;
}

} // namespace

IdealQ hermitian_critical_ideal(const VarietySpec& V, const QueryPoint& q, GBRun& run) {
    CriticalSystem S = build_critical_system(V, false);
    if (q.symbolic()) {
        IdealQ I{S.ring, S.equations};
        return saturate_critical(I, S.sing, S.sing_star, nullptr, run);
    }
    std::vector<PolyQ> sing, sing_star;
    IdealQ I = specialize_critical(S, q, &sing, &sing_star, nullptr);
    return saturate_critical(I, sing, sing_star, nullptr, run);
}

IdealQ projective_critical_ideal(const VarietySpec& V, GBRun& run) {
    CriticalSystem S = build_critical_system(V, true);
    IdealQ I{S.ring, S.equations};
    return saturate_critical(I, S.sing, S.sing_star, &S.zw_real, run);
}

IdealQ ed_critical_ideal(const VarietySpec& V, const std::vector<GaussianRational>& u, GBRun& run) {
    if (V.generators.empty()) throw input_error("ed_critical_ideal: variety has no implicit generators");
    for (const auto& f : V.generators)
        for (const auto& t : f.t)
            if (!(t.c.im == 0)) throw input_error("NotReal: generator '" + poly::to_string(f) + "'");
    int n = V.n;
    bool symbolic = u.empty();
    std::vector<std::string> names = canonical_names("z", n);
    if (symbolic)
        for (auto& s : canonical_names("u", n)) names.push_back(s);
    RingPtr R = poly::make_ring(names);
    auto zmap = block_map(n, 0);
    std::vector<PolyQ> f;
    for (const auto& g : V.generators) f.push_back(poly::map_vars(g, R, zmap));
    auto zvars = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) zvars[size_t(i)] = i;
    PolyMatrix<GaussianRational> J = poly::jacobian(f, zvars);
    PolyMatrix<GaussianRational> M;
    std::vector<PolyQ> row;
    for (int k = 0; k < n; ++k) {
        PolyQ uk = symbolic ? poly::make_varq(R, n + k) : poly::make_const(R, u[size_t(k)]);
        row.push_back(poly::sub(uk, poly::make_varq(R, k)));
    }
    M.push_back(std::move(row));
    for (auto& r : J) M.push_back(r);

    IdealQ I{R, f};
    if (V.codim + 1 <= int(M.size()) && V.codim + 1 <= n)
        for (auto& m : poly::minors(M, V.codim + 1))
            if (!m.is_zero()) I.gens.push_back(std::move(m));
    IdealQ sing = singular_locus_ideal(V);
    IdealQ sing_mapped{R, {}};
    for (const auto& g : sing.gens) sing_mapped.gens.push_back(poly::map_vars(g, R, zmap));
    return ideal::saturate_by_ideal(I, sing_mapped, run);
}

VarietySpec realification(const VarietySpec& V) {
    if (V.generators.empty()) throw input_error("realification: variety has no implicit generators");
    int n = V.n;
    std::vector<std::string> names;
    for (auto& s : canonical_names("x", n)) names.push_back(s);
    for (auto& s : canonical_names("y", n)) names.push_back(s);
    RingPtr R = poly::make_ring(names);
    std::vector<PolyQ> images;
    GaussianRational I = coeff::imaginary_unit();
    for (int k = 0; k < n; ++k) {
        PolyQ xk = poly::make_varq(R, k);
        PolyQ yk = poly::make_varq(R, n + k);
        images.push_back(poly::add(xk, poly::mul_term(yk, I, Mono{})));
    }
    VarietySpec out;
    out.n = 2 * n;
    out.zring = R;
    out.codim = 2 * V.codim;
    out.homogeneous = V.homogeneous;
    out.name = V.name.empty() ? "realification" : "realification(" + V.name + ")";
    for (const auto& f : V.generators) {
        PolyQ g = poly::substitute(f, R, images);
        PolyQ re{R, {}}, im{R, {}};
        for (const auto& t : g.t) {
            if (!(t.c.re == 0)) re.t.push_back({GaussianRational(t.c.re), t.m});
            if (!(t.c.im == 0)) im.t.push_back({GaussianRational(t.c.im), t.m});
        }
        poly::canonicalize(re);
        poly::canonicalize(im);
        if (!re.is_zero()) out.generators.push_back(std::move(re));
        if (!im.is_zero()) out.generators.push_back(std::move(im));
    }
    return out;
}

IdealQ conormal_ideal(const VarietySpec& V, GBRun& run) {
    if (V.generators.empty()) throw input_error("conormal_ideal: variety has no implicit generators");
    int n = V.n;
    std::vector<std::string> names = canonical_names("z", n);
    for (auto& s : canonical_names("s", n)) names.push_back(s);
    RingPtr R = poly::make_ring(names);
    auto zmap = block_map(n, 0);
    std::vector<PolyQ> f;
    for (const auto& g : V.generators) f.push_back(poly::map_vars(g, R, zmap));
    auto zvars = std::vector<int>(size_t(n));
    for (int i = 0; i < n; ++i) zvars[size_t(i)] = i;
    PolyMatrix<GaussianRational> J = poly::jacobian(f, zvars);
    PolyMatrix<GaussianRational> M;
    std::vector<PolyQ> row;
    for (int k = 0; k < n; ++k) row.push_back(poly::make_varq(R, n + k));
    M.push_back(std::move(row));
    for (auto& r : J) M.push_back(r);
    IdealQ I{R, f};
    if (V.codim + 1 <= int(M.size()) && V.codim + 1 <= n)
        for (auto& m : poly::minors(M, V.codim + 1))
            if (!m.is_zero()) I.gens.push_back(std::move(m));
    IdealQ sing = singular_locus_ideal(V);
    IdealQ sing_mapped{R, {}};
    for (const auto& g : sing.gens) sing_mapped.gens.push_back(poly::map_vars(g, R, zmap));
    return ideal::saturate_by_ideal(I, sing_mapped, run);
}

VarietySpec dual_variety(const VarietySpec& V, GBRun& run) {
    if (!V.homogeneous) throw input_error("NotHomogeneous: dual variety needs a cone");
    IdealQ N = conormal_ideal(V, run);
    std::vector<int> zblock(size_t(V.n));
    for (int i = 0; i < V.n; ++i) zblock[size_t(i)] = i;
    IdealQ D = ideal::eliminate(N, zblock, run); // lives in s_1..s_n
    // rename s -> z
    RingPtr R = poly::make_ring(canonical_names("z", V.n));
    std::vector<int> id(size_t(V.n));
    for (int i = 0; i < V.n; ++i) id[size_t(i)] = i;
    VarietySpec out;
    out.n = V.n;
    out.zring = R;
    out.homogeneous = true;
    out.name = V.name.empty() ? "dual" : V.name + "^v";
    for (const auto& f : D.gens) out.generators.push_back(poly::primitive_part(poly::map_vars(f, R, id)));
    if (out.generators.empty()) throw internal_error("dual_variety: elimination returned the zero ideal");
    // codimension of the dual from its own Groebner basis
    ideal::GroebnerBasis<GaussianRational> G = ideal::groebner(IdealQ{R, out.generators}, run);
    out.codim = V.n - ideal::dimension(G);
    return out;
}

ParametrizedSystem parametrized_critical_system(const VarietySpec& V, const QueryPoint& q) {
    if (!V.parametrized()) throw input_error("NoParametrization: variety has no parametrization");
    int m = V.nparams();
    int n = V.n;
    ParametrizedSystem S;
    S.m = m;
    S.n = n;
    S.symbolic = q.symbolic();
    std::vector<std::string> names;
    for (auto& s : canonical_names("z", m)) names.push_back(s);
    for (auto& s : canonical_names("w", m)) names.push_back(s);
    if (S.symbolic) {
        for (auto& s : canonical_names("u", n)) names.push_back(s);
        for (auto& s : canonical_names("v", n)) names.push_back(s);
    }
    S.ring = poly::make_ring(names);
    auto zmap = block_map(m, 0);
    auto wmap = block_map(m, m);
    PolyQ D = poly::make_zero<GaussianRational>(S.ring);
    for (int k = 0; k < n; ++k) {
        PolyQ psi = poly::map_vars(V.parametrization[size_t(k)], S.ring, zmap);
        PolyQ psi_bar{S.ring, {}};
        {
            PolyQ tmp = poly::map_vars(V.parametrization[size_t(k)], S.ring, wmap);
            for (auto& t : tmp.t) t.c = coeff::conj(t.c);
            poly::canonicalize(tmp);
            psi_bar = tmp;
        }
        PolyQ uk = S.symbolic ? poly::make_varq(S.ring, 2 * m + k) : poly::make_const(S.ring, q.u[size_t(k)]);
        PolyQ vk = S.symbolic ? poly::make_varq(S.ring, 2 * m + n + k) : poly::make_const(S.ring, q.v[size_t(k)]);
        D = poly::add(D, poly::mul(poly::sub(psi, uk), poly::sub(psi_bar, vk)));
    }
    for (int i = 0; i < 2 * m; ++i) S.equations.push_back(poly::derivative(D, i));
    return S;
}

PolyQ distance_pairing(const CriticalSystem& S) {
    PolyQ acc = poly::make_zero<GaussianRational>(S.ring);
    for (int k = 0; k < S.n; ++k) {
        PolyQ a = poly::sub(poly::make_varq(S.ring, S.ui(k)), poly::make_varq(S.ring, S.zi(k)));
        PolyQ b = poly::sub(poly::make_varq(S.ring, S.vi(k)), poly::make_varq(S.ring, S.wi(k)));
        acc = poly::add(acc, poly::mul(a, b));
    }
    return acc;
}

} // namespace hermdeg::hermitian
