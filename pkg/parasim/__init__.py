"""
parasim
=======
Paraconsistent similarity between knowledge entities: the S* measure,
contradiction extraction and minimal repair, and threshold super-categories.
"""

from parasim.contradiction import (
    RepairPlan,
    RepairPolicy,
    RepairReport,
    apply_repair,
    extract_contradictions,
    is_repairable,
    minimal_repairs,
    xi_rp,
)
from parasim.hierarchy import (
    ClusterMode,
    HierarchyTrace,
    SuperCategoryPartition,
    build_hierarchy,
    build_supercategories,
    verify_disjunction,
)
from parasim.kb_io import load_kb, parse_kb, serialize_kb
from parasim.kb_model import Atom, Entity, KnowledgeBase, Literal, Polarity, complement, is_internally_consistent
from parasim.similarity import (
    JaccardMode,
    PropertyPartition,
    SimilarityBreakdown,
    jaccard,
    partition_properties,
    s_star,
    similarity_matrix,
)

__version__ = '1.0.0'
