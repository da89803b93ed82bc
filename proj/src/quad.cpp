#include "trustproc/quad.hpp"

#include <stdexcept>

namespace trustproc {

Quad::Quad(Term subject, Iri predicate, Term object, Iri graph)
    : subject(std::move(subject)),
      predicate(std::move(predicate)),
      object(std::move(object)),
      graph(std::move(graph)) {
  if (this->subject.is_literal())
    throw std::invalid_argument("quad subject must be an IRI or blank node");
}

std::string Quad::to_nquads() const {
  return subject.to_nquads() + " <" + predicate.str() + "> " + object.to_nquads() +
         " <" + graph.str() + "> .";
}

bool Pattern::matches(const Quad& q) const {
  if (subject && *subject != q.subject) return false;
  if (predicate && *predicate != q.predicate) return false;
  if (object && *object != q.object) return false;
  if (graph && *graph != q.graph) return false;
  return true;
}

}  // namespace trustproc
