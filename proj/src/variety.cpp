#include "hermdeg/variety.hpp"

#include <fstream>
#include <sstream>

namespace hermdeg {

using coeff::GaussianRational;
using poly::FieldTag;
using poly::MonomialOrder;

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) out.push_back(strip(cur));
    return out;
}

} // namespace

VarietySpec parse_variety(const std::string& text, const std::string& name) {
    VarietySpec v;
    v.name = name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::string, int>> generator_lines, param_lines;
    std::optional<int> codim;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        auto starts = [&](const char* key) { return line.rfind(key, 0) == 0; };
        if (starts("vars:")) {
            auto names = split_commas(line.substr(5));
            if (names.empty()) throw input_error("line " + std::to_string(lineno) + ": empty vars list");
            v.zring = poly::make_ring(names);
            v.n = int(names.size());
        } else if (starts("homogeneous:")) {
            std::string val = strip(line.substr(12));
            if (val == "true") v.homogeneous = true;
            else if (val == "false") v.homogeneous = false;
            else throw input_error("line " + std::to_string(lineno) + ": homogeneous must be true or false");
        } else if (starts("codim:")) {
            codim = std::stoi(strip(line.substr(6)));
        } else if (starts("order:")) {
            // accepted for ideal round-trips; varieties always use degrevlex
        } else if (starts("params:")) {
            auto names = split_commas(line.substr(7));
            if (names.empty()) throw input_error("line " + std::to_string(lineno) + ": empty params list");
            v.pring = poly::make_ring(names);
        } else if (starts("param:")) {
            param_lines.emplace_back(strip(line.substr(6)), lineno);
        } else {
            generator_lines.emplace_back(line, lineno);
        }
    }
    if (!v.zring) throw input_error("variety file is missing a 'vars:' line");
    for (auto& [src, ln] : generator_lines) {
        PolyQ f = poly::parse_poly(src, v.zring, ln - 1);
        if (f.is_zero()) throw input_error("line " + std::to_string(ln) + ": zero generator");
        v.generators.push_back(std::move(f));
    }
    if (v.pring) {
        if (int(param_lines.size()) != v.n)
            throw input_error("parametrization must have exactly " + std::to_string(v.n) +
                              " 'param:' lines (one per ambient variable)");
        for (auto& [src, ln] : param_lines) v.parametrization.push_back(poly::parse_poly(src, v.pring, ln - 1));
    } else if (!param_lines.empty()) {
        throw input_error("'param:' lines require a 'params:' declaration");
    }
    if (v.generators.empty() && !v.parametrized())
        throw input_error("variety needs generators or a parametrization");
    v.codim = codim.value_or(int(v.generators.size()));
    if (!v.generators.empty() && (v.codim < 1 || v.codim > v.n))
        throw input_error("codim " + std::to_string(v.codim) + " out of range 1.." + std::to_string(v.n));
    if (v.homogeneous) {
        for (const auto& f : v.generators) {
            uint32_t d = f.total_degree();
            for (const auto& t : f.t)
                if (t.m.deg != d) throw input_error("NotHomogeneous: generator '" + poly::to_string(f) + "'");
        }
    }
    return v;
}

VarietySpec load_variety(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open variety file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string base = path;
    size_t slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    return parse_variety(buf.str(), base);
}

std::string variety_to_string(const VarietySpec& v) {
    std::ostringstream os;
    os << "vars:";
    for (int i = 0; i < v.n; ++i) os << (i ? ", " : " ") << v.zring->vars[size_t(i)];
    os << "\n";
    if (v.homogeneous) os << "homogeneous: true\n";
    os << "codim: " << v.codim << "\n";
    if (v.parametrized()) {
        os << "params:";
        for (int i = 0; i < v.pring->nvars(); ++i) os << (i ? ", " : " ") << v.pring->vars[size_t(i)];
        os << "\n";
        for (const auto& f : v.parametrization) os << "param: " << poly::to_string(f) << "\n";
    }
    for (const auto& f : v.generators) os << poly::to_string(f) << "\n";
    return os.str();
}

std::string ideal_to_string(const IdealQ& I) {
    std::ostringstream os;
    os << "vars:";
    for (int i = 0; i < I.ring->nvars(); ++i) os << (i ? ", " : " ") << I.ring->vars[size_t(i)];
    os << "\norder: ";
    switch (I.ring->order.kind) {
        case poly::OrderKind::Lex: os << "lex"; break;
        case poly::OrderKind::DegRevLex: os << "degrevlex"; break;
        case poly::OrderKind::Block: os << "block " << I.ring->order.block; break;
    }
    os << "\n";
    if (I.gens.empty()) os << "0\n";
    for (const auto& f : I.gens) os << poly::to_string(f) << "\n";
    return os.str();
}

IdealQ parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    RingPtr ring;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<std::pair<std::string, int>> gen_lines;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("vars:", 0) == 0) {
            ring = poly::make_ring(split_commas(line.substr(5)));
        } else if (line.rfind("order:", 0) == 0) {
            std::string val = strip(line.substr(6));
            if (val == "lex") order = MonomialOrder::lex();
            else if (val == "degrevlex") order = MonomialOrder::degrevlex();
            else if (val.rfind("block", 0) == 0) order = MonomialOrder::elim(std::stoi(strip(val.substr(5))));
            else throw input_error("line " + std::to_string(lineno) + ": unknown order '" + val + "'");
        } else {
            gen_lines.emplace_back(line, lineno);
        }
    }
    if (!ring) throw input_error("ideal text is missing a 'vars:' line");
    ring = poly::with_order(ring, order);
    IdealQ I{ring, {}};
    for (auto& [src, ln] : gen_lines) {
        PolyQ f = poly::parse_poly(src, ring, ln - 1);
        if (!f.is_zero()) I.gens.push_back(std::move(f));
    }
    return I;
}

VarietySpec product_variety(const VarietySpec& a, const VarietySpec& b) {
    if (a.parametrized() || b.parametrized())
        throw input_error("product of parametrized varieties is not supported; use implicit generators");
    VarietySpec v;
    v.n = a.n + b.n;
    std::vector<std::string> names;
    for (int i = 0; i < v.n; ++i) names.push_back("z" + std::to_string(i + 1));
    v.zring = poly::make_ring(names);
    std::vector<int> ma(size_t(a.n)), mb(size_t(b.n));
    for (int i = 0; i < a.n; ++i) ma[size_t(i)] = i;
    for (int i = 0; i < b.n; ++i) mb[size_t(i)] = a.n + i;
    for (const auto& f : a.generators) v.generators.push_back(poly::map_vars(f, v.zring, ma));
    for (const auto& f : b.generators) v.generators.push_back(poly::map_vars(f, v.zring, mb));
    v.codim = a.codim + b.codim;
    v.homogeneous = false; // a product of cones is not a cone in the joint sense used here
    v.name = a.name + "*" + b.name;
    return v;
}

VarietySpec scale_translate(const VarietySpec& v, const GaussianRational& c,
                            const std::vector<GaussianRational>& b) {
    if (c.is_zero()) throw input_error("scale factor must be nonzero");
    VarietySpec out = v;
    out.generators.clear();
    // c*X + b = V(f((z-b)/c))
    std::vector<PolyQ> images;
    for (int i = 0; i < v.n; ++i) {
        PolyQ zi = poly::make_varq(v.zring, i);
        PolyQ shifted = poly::sub(zi, poly::make_const(v.zring, b[size_t(i)]));
        images.push_back(poly::mul_term(shifted, coeff::inv(c), poly::Mono{}));
    }
    for (const auto& f : v.generators) out.generators.push_back(poly::substitute(f, v.zring, images));
    out.parametrization.clear();
    if (v.parametrized()) {
        for (const auto& psi : v.parametrization) out.parametrization.push_back(psi);
        for (int i = 0; i < v.n; ++i) {
            PolyQ scaled = poly::mul_term(v.parametrization[size_t(i)], c, poly::Mono{});
            out.parametrization[size_t(i)] = poly::add(scaled, poly::make_const(v.pring, b[size_t(i)]));
        }
    }
    return out;
}

} // namespace hermdeg
