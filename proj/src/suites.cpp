#include "tetbox/suites.hpp"

#include "tetbox/error.hpp"
#include "tetbox/evaluation.hpp"
#include "tetbox/intertwiner.hpp"
#include "tetbox/poly_realization.hpp"
#include "tetbox/tensor.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace tetbox {

nlohmann::json SuiteReport::to_json() const {
    return {{"suite", name}, {"passed", passed}, {"failed", failed}, {"failures", failures}, {"seconds", seconds}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"relations", "gradings", "transitions",
                                                "bilinear",  "twisting", "drinfeld"};
    return names;
}

namespace {

class Tally {
  public:
    explicit Tally(SuiteReport& r) : r_(r) {}

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++r_.passed;
        } else {
            ++r_.failed;
            r_.failures.push_back(what);
        }
    }

    /// Runs body; a thrown Error counts as a failure of `what`.
    void guarded(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            check(false, what + ": " + e.what());
        }
    }

  private:
    SuiteReport& r_;
};

std::vector<Rational> params(std::initializer_list<Rational> xs) { return xs; }

bool proportional(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.is_zero() || b.is_zero())
        return false;
    return normalize_form(a) == normalize_form(b);
}

std::vector<BetaQuad> sample_quads() {
    return {betas_for_param(EvalParam(2)),
            BetaQuad({Rational(0), Rational(1), Rational(3), Rational(7)}),
            BetaQuad({Rational(-2), Rational(5), Rational(1, 3), Rational(-7, 4)})};
}

bool bilinear_zero(const ExactMatrix& left, const ExactMatrix& g, const ExactMatrix& right) {
    if (left.cols() == 0 || right.cols() == 0)
        return true;
    return (left.transpose() * g * right).is_zero();
}

void relations_suite(Tally& t, int max_d) {
    auto expect = [&](const TetModule& m, const std::string& what) {
        t.guarded(what, [&] {
            auto r = verify_relations(m);
            t.check(r.ok(), what + (r.ok() ? "" : ": " + r.violations.front().describe()));
        });
    };
    for (int d = 1; d <= max_d; ++d)
        for (const auto& a : params({2, 3, -1, Rational(1, 2), Rational(7, 3)})) {
            EvalModuleSpec spec(d, EvalParam(a));
            TetModule v = build_eval_module(spec);
            expect(v, spec.str());
            expect(dualize(v), "dual " + spec.str());
        }
    for (int d = 1; d <= max_d; ++d)
        for (const auto& a : params({2, 3, Rational(1, 2)}))
            for (const auto& b : BracketBasisId::all())
                expect(bracket_basis_module({d, EvalParam(a)}, b), "table " + EvalModuleSpec(d, EvalParam(a)).str() +
                                                                       " [" + b.str() + "]");
    for (int d = 1; d <= max_d; ++d)
        for (const auto& q : sample_quads())
            expect(build_poly_module(d, q), "P_" + std::to_string(d) + "(" + q.str() + ")");
    const int dt = std::min(max_d, 3);
    for (int d1 = 1; d1 <= dt; ++d1)
        for (int d2 = 1; d2 <= dt; ++d2) {
            TensorSpec s{{EvalModuleSpec(d1, EvalParam(2)), EvalModuleSpec(d2, EvalParam(3))}};
            expect(build_tensor(s), s.str());
        }
    for (const auto& s : {"(1,2);(1,3);(1,-1)", "(2,1/2);(1,3);(2,7/3)"})
        expect(build_tensor(TensorSpec::parse(s)), s);
    TetModule v32 = build_eval_module({3, EvalParam(2)});
    for (const auto& sigma : Perm4::all())
        expect(twist(v32, sigma), "twist V_3(2) by " + sigma.str());
}

void gradings_suite(Tally& t, int max_d) {
    std::vector<TetModule> modules;
    for (int d = 1; d <= max_d; ++d)
        for (const auto& a : params({2, 3}))
            modules.push_back(build_eval_module({d, EvalParam(a)}));
    modules.push_back(build_tensor(TensorSpec::parse("(1,2);(2,3)")));
    modules.push_back(build_tensor(TensorSpec::parse("(1,2);(1,3)")));
    modules.push_back(build_poly_module(std::min(max_d, 3), sample_quads()[2]));
    modules.push_back(twist(build_eval_module({2, EvalParam(3)}), Perm4::parse("(0 1 2)")));

    for (const auto& m : modules) {
        const std::string name = m.label();
        t.guarded(name, [&] {
            UniPoly shape = shape_polynomial(m);
            t.check(shape.is_palindromic() && shape.coefficient(0).is_one(), name + ": shape palindromic, rho_0 = 1");
            int d = diameter(m);
            for (const auto& p : all_pairs()) {
                Decomposition ij = decomposition(m, p.i, p.j);
                Decomposition ji = decomposition(m, p.j, p.i);
                bool inverted = ij.diameter == d && ji.diameter == d;
                for (int n = 0; inverted && n <= d; ++n)
                    inverted = ij.components[static_cast<std::size_t>(n)] ==
                               ji.components[static_cast<std::size_t>(d - n)];
                t.check(inverted, name + ": [" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                      "] and its inversion");
            }
            auto table = action_table_violations(m);
            t.check(table.empty(), name + ": action table" + (table.empty() ? "" : " " + table.front()));
            auto raise = raising_violations(m);
            t.check(raise.empty(), name + ": raising maps" + (raise.empty() ? "" : " " + raise.front()));
            auto opposite = opposite_flag_violations(m);
            t.check(opposite.empty(), name + ": opposite flags" + (opposite.empty() ? "" : " " + opposite.front()));
        });
    }

    for (int d = 1; d <= max_d; ++d) {
        EvalModuleSpec spec(d, EvalParam(3));
        t.guarded(spec.str() + " flag [1]", [&] {
            Flag f = flag(build_eval_module(spec), 1);
            bool ok = f.components.size() == static_cast<std::size_t>(d) + 1;
            std::vector<Vector> span;
            for (int n = 0; ok && n <= d; ++n) {
                Vector e(static_cast<std::size_t>(d) + 1);
                e[static_cast<std::size_t>(n)] = 1;
                span.push_back(e);
                ok = f.components[static_cast<std::size_t>(n)] == Subspace::span(span, e.size());
            }
            t.check(ok, spec.str() + ": flag [1] is span{v_0..v_n}");
            t.check(shape_polynomial(build_eval_module(spec)) == UniPoly::geometric(static_cast<std::size_t>(d)),
                    spec.str() + ": shape 1 + ... + lambda^d");
        });
    }
    t.guarded("shape of V_2(2) (x) V_1(3)", [&] {
        TetModule m = tensor(build_eval_module({2, EvalParam(2)}), build_eval_module({1, EvalParam(3)}));
        t.check(shape_polynomial(m) == UniPoly::geometric(2) * UniPoly::geometric(1), "shape of V_2(2) (x) V_1(3)");
    });
}

void transitions_suite(Tally& t, int max_d) {
    for (int d = 1; d <= max_d; ++d)
        for (const auto& a : params({2, 3, Rational(7, 5)})) {
            EvalModuleSpec spec(d, EvalParam(a));
            const std::string name = spec.str();
            t.guarded(name, [&] {
                BetaQuad q = betas_for_param(spec.a);
                EtaPairings eta = poly_eta_pairings(d, q);
                for (const auto& from : BracketBasisId::all()) {
                    ExactMatrix u = coordinate_matrix(bracket_basis_vectors(d, q, from));
                    ExactMatrix u_inv = inverse(u);
                    for (const auto& to : {from.swap_first(), from.swap_middle(), from.swap_last()}) {
                        ExactMatrix v = coordinate_matrix(bracket_basis_vectors(d, q, to));
                        t.check(u_inv * v == transition_matrix(spec, from, to, eta),
                                name + ": transition [" + from.str() + "] -> [" + to.str() + "]");
                    }
                    // Around the square of first and last swaps.
                    BracketBasisId b = from;
                    ExactMatrix loop = transition_matrix(spec, b, b.swap_first(), eta) *
                                       ExactMatrix::reversal(static_cast<std::size_t>(d) + 1) *
                                       transition_matrix(spec, b.swap_first().swap_last(), b.swap_last(), eta) *
                                       ExactMatrix::reversal(static_cast<std::size_t>(d) + 1);
                    t.check(loop == ExactMatrix::identity(static_cast<std::size_t>(d) + 1),
                            name + ": T Z T' Z = I at [" + b.str() + "]");
                }
                auto tab = eta.table(spec);
                const long dd = d;
                t.check((tab[0][1] / tab[0][3]) * (tab[2][3] / tab[2][1]) == a.pow(dd), name + ": first product identity");
                t.check((tab[0][2] / tab[0][1]) * (tab[3][1] / tab[3][2]) == (Rational(1) - a.inverse()).pow(dd),
                        name + ": second product identity");
                t.check((tab[0][3] / tab[0][2]) * (tab[1][2] / tab[1][3]) == (Rational(1) - a).pow(-dd),
                        name + ": third product identity");
                EtaPairings arbitrary{2, 3, 5, 7};
                for (const auto& to : BracketBasisId::all()) {
                    ExactMatrix there = transition_matrix(spec, BracketBasisId(0, 1, 2, 3), to, arbitrary);
                    ExactMatrix back = transition_matrix(spec, to, BracketBasisId(0, 1, 2, 3), arbitrary);
                    t.check(there * back == ExactMatrix::identity(static_cast<std::size_t>(d) + 1),
                            name + ": round trip through [" + to.str() + "]");
                }
            });
        }
}

void bilinear_suite(Tally& t, int max_d) {
    for (int d = 1; d <= max_d; ++d)
        for (const auto& a : params({2, 3})) {
            EvalModuleSpec spec(d, EvalParam(a));
            const std::string name = spec.str();
            t.guarded(name, [&] {
                TetModule v = build_eval_module(spec);
                ExactMatrix g = standard_form_gram(spec);
                bool intertwines = true;
                for (const auto& p : all_pairs())
                    intertwines = intertwines && v.action(p).transpose() * g == -(g * v.action(p));
                t.check(intertwines, name + ": M^T G = -G M");
                t.check(d % 2 == 0 ? g.transpose() == g : g.transpose() == -g, name + ": symmetry parity");
                t.check(proportional(build_standard_form(v), g), name + ": solved form matches closed form");

                for (const auto& p : all_pairs()) {
                    Decomposition dec = decomposition(v, p.i, p.j);
                    bool dual = true;
                    for (int r = 0; r <= d; ++r)
                        for (int s = 0; s <= d; ++s)
                            if (r + s != d)
                                dual = dual && bilinear_zero(dec.components[static_cast<std::size_t>(r)].basis(), g,
                                                             dec.components[static_cast<std::size_t>(s)].basis());
                    t.check(dual, name + ": [" + std::to_string(p.i) + "," + std::to_string(p.j) + "] dual to its inversion");
                }
                for (int i = 0; i < 4; ++i) {
                    Flag f = flag(v, i);
                    bool complement = true;
                    for (int n = 0; n < d; ++n) {
                        const Subspace& a1 = f.components[static_cast<std::size_t>(n)];
                        const Subspace& a2 = f.components[static_cast<std::size_t>(d - n - 1)];
                        complement = complement && bilinear_zero(a1.basis(), g, a2.basis()) &&
                                     a1.dim() + a2.dim() == static_cast<std::size_t>(d) + 1;
                    }
                    t.check(complement, name + ": flag [" + std::to_string(i) + "] orthogonal complements");
                }

                BetaQuad q = betas_for_param(spec.a);
                TetModule poly = build_poly_module(d, q);
                PolyPairing form = poly_gram(d, q, 0, 1);
                bool same = true;
                for (const auto& p : all_pairs())
                    same = same && poly_gram(d, q, p.i, p.j).gram() == form.gram();
                t.check(same, name + ": polynomial form independent of the monomial basis");
                bool poly_intertwines = true;
                for (const auto& p : all_pairs())
                    poly_intertwines = poly_intertwines &&
                                       poly.action(p).transpose() * form.gram() == -(form.gram() * poly.action(p));
                t.check(poly_intertwines, name + ": polynomial form invariant");
                t.check(proportional(form.gram(), build_standard_form(poly)),
                        name + ": polynomial closed form matches solved form");
                for (const auto& b : BracketBasisId::all()) {
                    auto u = bracket_basis_vectors(d, q, b);
                    Rational top = form(u.front(), u.back());
                    bool pattern = !top.is_zero();
                    for (int r = 0; r <= d; ++r)
                        for (int s = 0; s <= d; ++s) {
                            Rational expected;
                            if (r + s == d)
                                expected = (r % 2 == 0 ? binomial(d, r) : -binomial(d, r)) * top;
                            pattern = pattern && form(u[static_cast<std::size_t>(r)], u[static_cast<std::size_t>(s)]) == expected;
                        }
                    t.check(pattern, name + ": pairing pattern in [" + b.str() + "]");
                    ExactMatrix gb = build_standard_form(bracket_basis_module(spec, b));
                    ExactMatrix expected_gram(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d) + 1);
                    for (int r = 0; r <= d; ++r)
                        expected_gram(static_cast<std::size_t>(r), static_cast<std::size_t>(d - r)) =
                            r % 2 == 0 ? binomial(d, r) : -binomial(d, r);
                    t.check(proportional(gb, expected_gram), name + ": table-basis form pattern in [" + b.str() + "]");
                }
            });
        }
    t.guarded("tensor form", [&] {
        TetModule u = build_eval_module({1, EvalParam(2)});
        TetModule v = build_eval_module({1, EvalParam(3)});
        TetModule uv = tensor(u, v);
        ExactMatrix g = build_standard_form(uv);
        t.check(proportional(g, kronecker(build_standard_form(u), build_standard_form(v))),
                "V_1(2) (x) V_1(3): form is the product form");
        t.check(g.transpose() == g, "V_1(2) (x) V_1(3): even diameter gives symmetric form");
    });
}

void twisting_suite(Tally& t, int max_d) {
    const int dt = std::min(max_d, 3);
    for (int d = 1; d <= dt; ++d) {
        EvalModuleSpec spec(d, EvalParam(3));
        TetModule v = build_eval_module(spec);
        for (const auto& sigma : Perm4::all()) {
            const std::string name = spec.str() + " twisted by " + sigma.str();
            t.guarded(name, [&] {
                TetModule tw = twist(v, sigma);
                EvalParam expected = perm_on_param(sigma, spec.a);
                auto cls = classify(tw);
                auto* factors = std::get_if<std::vector<EvalModuleSpec>>(&cls);
                t.check(factors && factors->size() == 1 && factors->front() == EvalModuleSpec(d, expected),
                        name + ": classifies as V_d(sigma(a))");
                auto param = extract_eval_param(tw);
                auto* p = std::get_if<EvalParam>(&param);
                t.check(p && *p == expected, name + ": evaluation parameter");
                t.check(twist(tw, sigma.inverse()) == v, name + ": untwist");
                if (is_in_G(sigma)) {
                    auto iso = solve_intertwiner(v, tw);
                    t.check(iso && try_inverse(*iso).has_value(), name + ": isomorphic to the untwisted module");
                }
            });
        }
    }
    t.guarded("twist composition", [&] {
        TetModule v = build_eval_module({2, EvalParam(Rational(7, 3))});
        bool ok = true;
        for (const auto& s : Perm4::all())
            for (const auto& r : Perm4::all())
                ok = ok && twist(twist(v, r), s) == twist(v, s * r);
        t.check(ok, "twist(twist(V, tau), sigma) = twist(V, sigma tau)");
    });
    t.guarded("tensor twist", [&] {
        TensorSpec spec = TensorSpec::parse("(1,2);(2,3)");
        TetModule m = build_tensor(spec);
        for (const auto& sigma : Perm4::all()) {
            std::vector<EvalModuleSpec> expected;
            for (const auto& f : spec.factors)
                expected.emplace_back(f.d, perm_on_param(sigma, f.a));
            TetModule mapped = build_tensor(TensorSpec{expected});
            t.check(drinfeld_polynomial(twist(m, sigma)) == drinfeld_polynomial(mapped),
                    spec.str() + " twisted by " + sigma.str() + ": factor parameters map to sigma(a_j)");
        }
    });
    for (int d = 1; d <= max_d; ++d)
        for (const auto& q : sample_quads()) {
            const std::string name = "P_" + std::to_string(d) + "(" + q.str() + ")";
            t.guarded(name, [&] {
                TetModule p = build_poly_module(d, q);
                for (std::size_t g = 1; g < 4; ++g) {
                    const Perm4& sigma = group_G()[g];
                    ExactMatrix phi = automorphism_for_sigma(d, q, sigma);
                    ExactMatrix phi_inv = inverse(phi);
                    TetModule tw = twist(p, sigma);
                    bool ok = true;
                    for (const auto& pair : all_pairs())
                        ok = ok && tw.action(pair) == phi * p.action(pair) * phi_inv;
                    t.check(ok, name + ": phi conjugation equals twist by " + sigma.str());
                    // Every labelling (i j)(k l) of sigma conjugates identically.
                    bool labels = true;
                    for (int i = 0; i < 4; ++i) {
                        int j = sigma(i);
                        int k = -1, l = -1;
                        for (int v = 0; v < 4; ++v)
                            if (v != i && v != j)
                                (k < 0 ? k : l) = v;
                        for (auto [kk, ll] : {std::pair{k, l}, std::pair{l, k}}) {
                            ExactMatrix alt = automorphism_for_labelling(d, q, i, j, kk, ll);
                            ExactMatrix alt_inv = inverse(alt);
                            for (const auto& pair : all_pairs())
                                labels = labels && alt * p.action(pair) * alt_inv == tw.action(pair);
                        }
                    }
                    t.check(labels, name + ": all labellings of " + sigma.str() + " agree");
                    if (d == 1) {
                        bool lines = true;
                        for (int r = 0; r < 4; ++r) {
                            LinearForm zr = linear_form(q, r), zs = linear_form(q, sigma(r));
                            Vector img = phi * Vector{zr.p, zr.q};
                            lines = lines && img[0] * zs.q == img[1] * zs.p;
                        }
                        t.check(lines, name + ": phi sends z_r into the line of z_sigma(r)");
                    }
                }
            });
        }
    t.guarded("parameter action", [&] {
        bool ok = true;
        for (const auto& a : params({2, 3, 5, -1, Rational(1, 2), Rational(7, 3)}))
            for (const auto& s : Perm4::all())
                for (const auto& r : Perm4::all())
                    ok = ok && perm_on_param(s * r, EvalParam(a)) == perm_on_param(s, perm_on_param(r, EvalParam(a)));
        t.check(ok, "parameter action is a group action");
        bool kernel = true;
        for (const auto& s : Perm4::all()) {
            bool fixes = true;
            for (const auto& a : params({3, 5, Rational(7, 3)}))
                fixes = fixes && perm_on_param(s, EvalParam(a)) == EvalParam(a);
            kernel = kernel && fixes == is_in_G(s);
        }
        t.check(kernel, "G is the kernel of the parameter action");
    });
}

void drinfeld_suite(Tally& t, int max_d) {
    for (int d = 1; d <= max_d; ++d)
        for (const auto& a : params({2, 3, Rational(1, 2)})) {
            EvalModuleSpec spec(d, EvalParam(a));
            t.guarded(spec.str(), [&] {
                UniPoly p = drinfeld_polynomial(build_eval_module(spec));
                t.check(p == UniPoly{Rational(1), -a}.pow(static_cast<std::size_t>(d)), spec.str() + ": (1 - a lambda)^d");
                t.check(drinfeld_polynomial(dualize(build_eval_module(spec))) == p, spec.str() + ": dual has the same polynomial");
            });
        }
    t.guarded("theta V_2(3)", [&] {
        auto th = theta_sequence(build_eval_module({2, EvalParam(3)}));
        t.check(th.theta == Vector{1, 6, 36}, "theta of V_2(3) is (1, 6, 36)");
    });
    const int dt = std::min(max_d, 3);
    const auto pool = params({2, 3, Rational(1, 2), -1});
    for (std::size_t x = 0; x < pool.size(); ++x)
        for (std::size_t y = x + 1; y < pool.size(); ++y)
            for (int d1 = 1; d1 <= dt; ++d1)
                for (int d2 = 1; d2 <= dt; ++d2) {
                    EvalModuleSpec s1(d1, EvalParam(pool[x])), s2(d2, EvalParam(pool[y]));
                    const std::string name = s1.str() + " (x) " + s2.str();
                    t.guarded(name, [&] {
                        TetModule u = build_eval_module(s1), v = build_eval_module(s2);
                        TetModule uv = tensor(u, v);
                        ThetaSequence tu = theta_sequence(u), tv = theta_sequence(v), tuv = theta_sequence(uv);
                        UniPoly puv = drinfeld_from_theta(tuv);
                        t.check(puv == drinfeld_from_theta(tu) * drinfeld_from_theta(tv), name + ": P multiplicative");
                        bool rule = tuv.theta.size() == static_cast<std::size_t>(d1 + d2) + 1;
                        for (int i = 0; rule && i <= d1 + d2; ++i) {
                            Rational s;
                            for (int n = 0; n <= i; ++n) {
                                if (i - n > d1 || n > d2)
                                    continue;
                                Rational c = binomial(i, n);
                                s += c * c * tu.theta[static_cast<std::size_t>(i - n)] * tv.theta[static_cast<std::size_t>(n)];
                            }
                            rule = s == tuv.theta[static_cast<std::size_t>(i)];
                        }
                        t.check(rule, name + ": theta convolution rule");
                        t.check(drinfeld_polynomial(tensor(v, u)) == puv, name + ": tensor order irrelevant");
                        t.check(puv.degree() == d1 + d2 && !puv.evaluate(1).is_zero(), name + ": degree and P(1)");
                        t.check(shape_polynomial(uv) == shape_polynomial(u) * shape_polynomial(v), name + ": S multiplicative");
                    });
                }
}

} // namespace

std::vector<SuiteReport> run_suites(std::string_view name, int max_d) {
    if (max_d < 1)
        throw Error(ErrorCode::InvalidArgument, "max-d must be at least 1");
    std::vector<std::string> names;
    if (name == "all")
        names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end())
        names.emplace_back(name);
    else
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");

    std::vector<SuiteReport> out;
    for (const auto& n : names) {
        SuiteReport r;
        r.name = n;
        Tally t(r);
        auto start = std::chrono::steady_clock::now();
        if (n == "relations")
            relations_suite(t, max_d);
        else if (n == "gradings")
            gradings_suite(t, max_d);
        else if (n == "transitions")
            transitions_suite(t, max_d);
        else if (n == "bilinear")
            bilinear_suite(t, max_d);
        else if (n == "twisting")
            twisting_suite(t, max_d);
        else
            drinfeld_suite(t, max_d);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace tetbox
