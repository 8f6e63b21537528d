use std::collections::HashMap;

use super::SimplicialComplex;
use crate::vertex_set::VertexSet;

impl SimplicialComplex {
    /// Vertex decomposability.
    ///
    /// Non-pure complexes are never vertex decomposable. The void complex,
    /// `{∅}` and single simplices are. Otherwise some vertex must have both
    /// its link and its deletion vertex decomposable. Results are memoised
    /// on the facet list.
    pub fn is_vertex_decomposable(&self) -> bool {
        let mut memo = HashMap::new();
        vertex_decomposable(self, &mut memo)
    }
}

fn vertex_decomposable(c: &SimplicialComplex, memo: &mut HashMap<Vec<VertexSet>, bool>) -> bool {
    if !c.is_pure() {
        return false;
    }
    if c.facet_count() <= 1 {
        return true;
    }
    if let Some(&known) = memo.get(c.facets()) {
        return known;
    }
    let answer = c.vertex_set().iter().any(|v| {
        let v = VertexSet::singleton(v);
        let link = c.link(v).expect("vertex of the complex is a face");
        vertex_decomposable(&link, memo) && vertex_decomposable(&c.deletion(v), memo)
    });
    memo.insert(c.facets().to_vec(), answer);
    answer
}
