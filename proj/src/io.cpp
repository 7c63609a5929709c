#include "wrtk/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace wrtk {

using nlohmann::json;

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

json to_json(const ComplexValue& v) {
    return json{{"re", v.re_str.empty() ? fmt_double(v.re) : v.re_str},
                {"im", v.im_str.empty() ? fmt_double(v.im) : v.im_str}};
}

json to_json(const PhaseUnit& p) {
    return json{{"num", p.numer().str()}, {"den", p.denom().str()}};
}

json to_json(const Rational& r) {
    return json{{"num", r.num().str()}, {"den", r.den().str()}};
}

json to_json(const SeifertData& s) {
    return json{{"r1", to_json(s.r1)}, {"r2", to_json(s.r2)}, {"r3", to_json(s.r3)}};
}

json spec_json(const SurgerySpec& spec) {
    return json{{"a", spec.a}, {"b", spec.b}, {"p", spec.p}, {"n", spec.n}};
}

json with_envelope(const SurgerySpec& spec, int precision_bits, json payload) {
    json out{{"spec", spec_json(spec)},
             {"precision_bits", precision_bits},
             {"tool_version", tool_version}};
    out.update(payload);
    return out;
}

json to_json(const TauValue& t) {
    return with_envelope(t.spec, t.precision_bits, json{{"tau", to_json(t.value)}});
}

json to_json(const ExpansionReport& rep, const SurgerySpec& spec) {
    json a_terms = json::array();
    for (const auto& term : rep.a_terms)
        a_terms.push_back(json{{"sign", term.sign == Sign::plus ? "+" : "-"},
                               {"h", term.label.h},
                               {"k", term.label.k},
                               {"l", term.label.l},
                               {"term", to_json(term.term)}});
    json b_terms = json::array();
    for (const auto& term : rep.b_terms)
        b_terms.push_back(json{{"l", term.l}, {"term", to_json(term.term)}});
    return json{{"n", rep.n},
                {"tau", to_json(rep.tau_exact)},
                {"A", to_json(rep.A)},
                {"B", to_json(rep.B)},
                {"approx", to_json(rep.approx)},
                {"residual", fmt_double(rep.residual)},
                {"a_terms", a_terms},
                {"b_terms", b_terms},
                {"spec", spec_json(spec)}};
}

json to_json(const SweepResult& sweep) {
    json rows = json::array();
    for (const auto& row : sweep.rows)
        rows.push_back(json{{"n", row.n},
                            {"tau", to_json(row.tau)},
                            {"A", to_json(row.A)},
                            {"B", to_json(row.B)},
                            {"residual", fmt_double(row.residual)},
                            {"n_times_residual", fmt_double(row.n_times_residual)}});
    return json{{"rows", rows},
                {"summary",
                 json{{"slope", fmt_double(sweep.slope)},
                      {"lower_median", fmt_double(sweep.lower_median)},
                      {"upper_median", fmt_double(sweep.upper_median)},
                      {"max_n_residual", fmt_double(sweep.max_n_residual)}}}};
}

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream os;
    os << "n,tau_re,tau_im,A_re,A_im,B_re,B_im,residual,n_times_residual\n";
    for (const auto& row : sweep.rows)
        os << row.n << ',' << fmt_double(row.tau.re) << ',' << fmt_double(row.tau.im) << ','
           << fmt_double(row.A.re) << ',' << fmt_double(row.A.im) << ',' << fmt_double(row.B.re)
           << ',' << fmt_double(row.B.im) << ',' << fmt_double(row.residual) << ','
           << fmt_double(row.n_times_residual) << '\n';
    os << "# slope=" << fmt_double(sweep.slope) << " lower_median=" << fmt_double(sweep.lower_median)
       << " upper_median=" << fmt_double(sweep.upper_median)
       << " max_n_residual=" << fmt_double(sweep.max_n_residual) << '\n';
    return os.str();
}

std::string expansion_csv_row(const ExpansionReport& rep) {
    std::ostringstream os;
    os << "n,tau_re,tau_im,A_re,A_im,B_re,B_im,residual,n_times_residual\n";
    os << rep.n << ',' << fmt_double(rep.tau_exact.re) << ',' << fmt_double(rep.tau_exact.im) << ','
       << fmt_double(rep.A.re) << ',' << fmt_double(rep.A.im) << ',' << fmt_double(rep.B.re) << ','
       << fmt_double(rep.B.im) << ',' << fmt_double(rep.residual) << ','
       << fmt_double(rep.n * rep.residual) << '\n';
    return os.str();
}

std::string invariant_table_csv(const SurgerySpec& spec) {
    std::ostringstream os;
    os << "h,k,l,class,cs_plus,cs_minus,t_plus,t_minus\n";
    for (const auto& x : enumerate_H(spec)) {
        const char* cls = classify_rep(x, spec) == RepClass::SU2 ? "SU2" : "SU11";
        os << x.h << ',' << x.k << ',' << x.l << ',' << cls << ','
           << cs_pm_irr(Sign::plus, x, spec).value.str() << ','
           << cs_pm_irr(Sign::minus, x, spec).value.str() << ','
           << fmt_double(t_pm_irr(Sign::plus, x, spec)) << ','
           << fmt_double(t_pm_irr(Sign::minus, x, spec)) << '\n';
    }
    return os.str();
}

std::string labels_csv(const std::vector<IrrepLabel>& labels) {
    std::ostringstream os;
    os << "h,k,l\n";
    for (const auto& x : labels) os << x.h << ',' << x.k << ',' << x.l << '\n';
    return os.str();
}

std::string points_csv(const std::vector<LatticePoint>& points, const char* first_name) {
    std::ostringstream os;
    os << first_name << ",m\n";
    for (const auto& gm : points) os << gm.first << ',' << gm.second << '\n';
    return os.str();
}

json labels_json(const std::vector<IrrepLabel>& labels) {
    json out = json::array();
    for (const auto& x : labels) out.push_back(json::array({x.h, x.k, x.l}));
    return out;
}

json points_json(const std::vector<LatticePoint>& points) {
    json out = json::array();
    for (const auto& gm : points) out.push_back(json::array({gm.first, gm.second}));
    return out;
}

} // namespace wrtk
