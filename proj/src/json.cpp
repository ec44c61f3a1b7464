#include "fermatinv/json.hpp"

namespace fermatinv {

Json class_group_json(ClassGroup const & cg)
{
    Json j;
    j["d"] = int_json(cg.D);
    j["h"] = int_json(cg.h);
    Json s = Json::array();
    for (auto const & x : cg.structure)
        s.push_back(int_json(x));
    j["structure"] = s;
    Json forms = Json::array();
    for (auto const & f : cg.forms)
        forms.push_back(form_json(f));
    j["forms"] = forms;
    return j;
}

Json irregularity_json(IrregularityReport const & r)
{
    Json j;
    j["p"] = r.p;
    j["irregular"] = r.irregular;
    j["witnesses"] = r.witnesses;
    return j;
}

Json ramification_json(RamificationReport const & r)
{
    Json j;
    j["p"] = int_json(r.p);
    j["l"] = int_json(r.l);
    j["wieferich"] = r.wieferich;
    j["p_unramified_in_N"] = r.p_unramified_in_N;
    j["shape_in_L"] = to_string(r.shape_in_L);
    j["num_primes_above_p_in_N"] = int_json(r.num_primes_above_p_in_N);
    return j;
}

namespace {

Json reduction_json(ReductionData const & r)
{
    Json j;
    j["q"] = int_json(r.q);
    j["residue_degree"] = r.residue_degree;
    if (r.residue_degree == 1 && r.root_of_d != 0)
        j["root_of_d"] = int_json(r.root_of_d);
    j["jacobian_order"] = int_json(r.jacobian_order);
    j["point_order"] = int_json(r.point_order);
    return j;
}

} // namespace

Json certificate_json(NonTorsionCertificate const & c)
{
    Json j;
    j["point"] = c.point;
    j["first"] = reduction_json(c.first);
    j["second"] = reduction_json(c.second);
    j["verdict"] = to_string(c.verdict);
    return j;
}

Json invariant_json(InvariantReport const & r)
{
    Json j;
    j["p"] = r.candidate.p;
    j["u"] = int_json(r.candidate.u);
    j["d"] = int_json(r.candidate.d);
    j["h"] = int_json(r.class_group.h);
    Json basis = Json::array();
    for (auto const & b : r.a.basis())
        basis.push_back(b.to_string());
    j["a"] = {{"norm", int_json(r.a.norm())}, {"basis", basis}};
    j["class_of_a"] = form_json(r.class_of_a);
    j["p_splitting"] = to_string(r.p_splitting);
    j["s_quotient_order"] = r.s_quotient_order.get_ui();
    j["c_order"] = r.c_order.get_ui();
    Json orders = Json::array();
    for (auto const & o : r.psi_tuple_orders)
        orders.push_back(o.get_ui());
    j["psi_tuple_orders"] = orders;
    j["nonvanishing"] = r.nonvanishing;
    j["infinite_order"] = to_string(r.infinite_order());
    return j;
}

} // namespace fermatinv
