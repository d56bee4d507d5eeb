#include <forcinglab/completion.hpp>

namespace forcinglab {

RegularOpenAlgebra::RegularOpenAlgebra(PosetPtr base) :
    base_(std::move(base))
{
    const auto& P = *base_;
    embedding_.reserve(P.size());
    for (std::size_t p = 0; p < P.size(); ++p)
        embedding_.push_back(ro(P.down(p)));

    ConditionSet seen = P.empty_set();
    const auto& mins = P.minimal();
    for (auto m = mins.find_first(); m != ConditionSet::npos; m = mins.find_next(m)) {
        if (seen.test(m))
            continue;
        atoms_.push_back(m);
        seen |= P.up(m) & P.down(m);
    }
}

ConditionSet RegularOpenAlgebra::perp(const ConditionSet& u) const
{
    ConditionSet touched = base_->empty_set();
    for (auto x = u.find_first(); x != ConditionSet::npos; x = u.find_next(x))
        touched |= base_->compatible_with(x);
    touched.flip();
    return touched;
}

std::vector<ConditionSet> RegularOpenAlgebra::elements() const
{
    if (!materializable())
        throw SizeError("RO(" + base_->name() + ") has 2^" + std::to_string(atoms_.size())
            + " elements; too many to materialize");
    std::vector<ConditionSet> out;
    const std::size_t count = std::size_t{1} << atoms_.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        ConditionSet gens = base_->empty_set();
        for (std::size_t a = 0; a < atoms_.size(); ++a)
            if (mask >> a & 1)
                gens.set(atoms_[a]);
        out.push_back(generate(gens));
    }
    return out;
}

std::size_t RegularOpenAlgebra::element_count() const
{
    if (atoms_.size() > 62)
        throw SizeError("RO(" + base_->name() + ") element count overflows");
    return std::size_t{1} << atoms_.size();
}

} // namespace forcinglab
