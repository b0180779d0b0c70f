#include "chowforge/graded_quotient.hpp"

namespace chowforge {

template class GradedQuotient<Rational>;
template class GradedQuotient<ModP>;
template class SubspaceIdeal<Rational>;
template class SubspaceIdeal<ModP>;

}  // namespace chowforge
