"""
Paraconsistent Similarity Dashboard
===================================
Interactive Streamlit dashboard for exploring a knowledge base: the S*
matrix, super-categories at a threshold, contradictions and repairs, and
S* against the Jaccard baseline.

Usage:
    streamlit run dashboard/app.py
"""

import os
import sys
from glob import glob

import pandas as pd
import streamlit as st

# ============================================================================
# CONFIGURATION
# ============================================================================

def get_project_root():
    """Get the project root directory (normalized for Windows)."""
    return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))


sys.path.insert(0, get_project_root())

from parasim import charts, render  # noqa: E402
from parasim.config import load_run_config  # noqa: E402
from parasim.contradiction import RepairPolicy, apply_repair, minimal_repairs, xi_rp  # noqa: E402
from parasim.errors import IrreparableEntityError, ParasimError  # noqa: E402
from parasim.hierarchy import ClusterMode, partition_matrix, verify_disjunction  # noqa: E402
from parasim.kb_io import parse_kb  # noqa: E402
from parasim.kb_model import is_internally_consistent  # noqa: E402
from parasim.similarity import JaccardMode, jaccard, similarity_matrix  # noqa: E402

# Page config
st.set_page_config(
    page_title="Paraconsistent Similarity",
    page_icon="⚖️",
    layout="wide",
    initial_sidebar_state="expanded"
)

SAMPLE_FOLDER = os.path.join(get_project_root(), 'data', 'sample')
CONFIG = load_run_config()


# ============================================================================
# DATA FUNCTIONS
# ============================================================================

def list_sample_files():
    """Knowledge-base files bundled in data/sample/."""
    return sorted(glob(os.path.join(SAMPLE_FOLDER, '*.kb')))


@st.cache_data
def load_text(path):
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


@st.cache_data
def compute(text):
    """Parse and compute the S* matrix once per knowledge-base text."""
    kb = parse_kb(text)
    return kb, similarity_matrix(kb)


# ============================================================================
# UI COMPONENTS
# ============================================================================

def render_value_card(title, value, precision):
    st.metric(label=title, value=render.format_decimal(value, precision),
              help=render.format_fraction(value))


def render_section_header(title, icon=None):
    """Render a section header."""
    if icon:
        st.markdown(f"### {icon} {title}")
    else:
        st.markdown(f"### {title}")


# ============================================================================
# MAIN DASHBOARD
# ============================================================================

def main():
    with st.sidebar:
        st.title("Paraconsistent Similarity")
        st.markdown("---")

        page = st.radio(
            "Navigation",
            ["📊 Overview", "🗂️ Super-categories", "⚡ Contradictions", "⚖️ S* vs Jaccard"]
        )

        st.markdown("---")

        files = list_sample_files()
        names = [os.path.basename(path) for path in files]
        choice = st.selectbox("Knowledge base", names) if names else None
        uploaded = st.file_uploader("...or upload a .kb file", type=['kb', 'txt'])
        precision = st.number_input("Decimal places", min_value=0, max_value=6,
                                    value=CONFIG.decimal_precision)

        if st.button("🔄 Refresh Data"):
            st.cache_data.clear()
            st.rerun()

    if uploaded is not None:
        text = uploaded.getvalue().decode('utf-8')
    elif choice:
        text = load_text(os.path.join(SAMPLE_FOLDER, choice))
    else:
        st.error("⚠️ No knowledge base found!")
        st.markdown("Add a `.kb` file to `data/sample/` or upload one.")
        return

    try:
        kb, matrix = compute(text)
    except ParasimError as e:
        st.error(f"ERROR: {e}")
        return

    if len(kb) == 0:
        st.warning("The knowledge base has no entities.")
        return

    if page == "📊 Overview":
        render_overview_page(kb, matrix, precision)
    elif page == "🗂️ Super-categories":
        render_supercategories_page(kb, matrix, precision)
    elif page == "⚡ Contradictions":
        render_contradictions_page(kb, precision)
    elif page == "⚖️ S* vs Jaccard":
        render_compare_page(kb, matrix, precision)


# ============================================================================
# PAGE: OVERVIEW
# ============================================================================

def render_overview_page(kb, matrix, precision):
    st.title("📊 S* Overview")

    off_diagonal = [cell.s_star for _, _, cell in matrix.pairs()]

    col1, col2, col3, col4 = st.columns(4)
    with col1:
        st.metric("Entities", len(kb))
    with col2:
        st.metric("Inconsistent entities", sum(1 for k in kb if not is_internally_consistent(k)))
    with col3:
        if off_diagonal:
            render_value_card("Highest S*", max(off_diagonal), precision)
    with col4:
        if off_diagonal:
            render_value_card("Lowest S*", min(off_diagonal), precision)

    st.markdown("---")

    col1, col2 = st.columns(2)
    with col1:
        render_section_header("Heatmap")
        st.plotly_chart(charts.matrix_heatmap(matrix), use_container_width=True)
    with col2:
        render_section_header("Matrix (exact)")
        st.dataframe(render.matrix_frame(matrix), use_container_width=True)

    render_section_header("Pairs")
    st.dataframe(render.pairs_frame(matrix, precision), use_container_width=True, hide_index=True)


# ============================================================================
# PAGE: SUPER-CATEGORIES
# ============================================================================

def render_supercategories_page(kb, matrix, precision):
    st.title("🗂️ Super-categories")

    col1, col2 = st.columns(2)
    with col1:
        theta_text = st.text_input("Threshold theta (decimal or fraction)",
                                   render.format_fraction(CONFIG.theta))
    with col2:
        mode = st.selectbox("Mode", [m.value for m in ClusterMode],
                            index=[m for m in ClusterMode].index(CONFIG.mode))

    try:
        partition = partition_matrix(matrix, theta_text, ClusterMode(mode))
    except (ValueError, ZeroDivisionError, ParasimError) as e:
        st.error(f"Invalid theta: {e}")
        return

    report = verify_disjunction(partition, kb, matrix)

    st.markdown(f"**Blocks:** `{render.format_blocks(partition.blocks)}`")
    if report.ok:
        st.success("Every pair split across blocks has S* ≤ theta")
    else:
        st.warning(f"{len(report.violations)} cross-block pair(s) above theta")
        st.dataframe(pd.DataFrame(render.disjunction_to_dict(report)['violations']),
                     use_container_width=True, hide_index=True)

    col1, col2 = st.columns(2)
    with col1:
        st.plotly_chart(charts.block_sizes_bar(partition), use_container_width=True)
    with col2:
        st.plotly_chart(charts.matrix_heatmap(matrix, partition.theta), use_container_width=True)


# ============================================================================
# PAGE: CONTRADICTIONS
# ============================================================================

def render_contradictions_page(kb, precision):
    st.title("⚡ Contradictions and Repairs")

    rows = []
    for entity in kb:
        report = minimal_repairs(entity, CONFIG.repair_policy)
        rows.append({
            'entity_id': entity.id,
            'literals': render.format_literals(entity.literals),
            'E(K)': render.format_literals(report.extracted),
            'pairs': report.minimal_size,
            'repairable': report.repairable,
        })
    st.dataframe(pd.DataFrame(rows), use_container_width=True, hide_index=True)

    st.markdown("---")
    render_section_header("Repair one entity")

    col1, col2 = st.columns(2)
    with col1:
        entity_id = st.selectbox("Entity", list(kb.ids))
    with col2:
        policy = st.selectbox("Policy", [p.value for p in RepairPolicy
                                         if p is not RepairPolicy.MANUAL])

    entity = kb.get(entity_id)
    report = minimal_repairs(entity, RepairPolicy(policy), CONFIG.enumerate_limit)
    if not report.repairable:
        st.error("Irreparable: every literal is involved in a contradiction")
        return

    for index, plan in enumerate(report.plans, 1):
        repaired = apply_repair(entity, plan)
        st.markdown(f"Plan {index}: remove `{render.format_literals(plan.removals)}` → "
                    f"`{render.format_literals(repaired.literals)}`")
    if report.truncated:
        st.info(f"Showing {len(report.plans)} of {2 ** report.minimal_size} plans")

    others = [other for other in kb if other.id != entity_id]
    if others:
        render_section_header("Repaired similarity")
        data = []
        for other in others:
            try:
                value = xi_rp(entity, other, RepairPolicy(policy))
            except IrreparableEntityError as e:
                data.append({'other': other.id, 'repaired S*': f"n/a ({e.entity_id} irreparable)"})
                continue
            data.append({'other': other.id, 'repaired S*': render.format_value(value.s_star, precision)})
        st.dataframe(pd.DataFrame(data), use_container_width=True, hide_index=True)


# ============================================================================
# PAGE: S* VS JACCARD
# ============================================================================

def render_compare_page(kb, matrix, precision):
    st.title("⚖️ S* vs Jaccard")

    rows = []
    table = []
    for id1, id2, cell in matrix.pairs():
        k1, k2 = kb.get(id1), kb.get(id2)
        pair = f"{id1}-{id2}"
        positive = jaccard(k1, k2, JaccardMode.POSITIVE_ONLY)
        everything = jaccard(k1, k2, JaccardMode.ALL_LITERALS)
        rows += [
            {'pair': pair, 'measure': 'S*', 'value': float(cell.s_star)},
            {'pair': pair, 'measure': 'Jaccard (positive)', 'value': float(positive)},
        ]
        table.append({
            'pair': pair,
            'S*': render.format_value(cell.s_star, precision),
            'Jaccard (positive)': render.format_value(positive, precision),
            'Jaccard (all)': render.format_value(everything, precision),
            'signs differ': render.sign_of(cell.s_star) != render.sign_of(positive),
        })

    if not rows:
        st.info("Need at least two entities")
        return

    st.plotly_chart(charts.compare_bar(pd.DataFrame(rows)), use_container_width=True)
    st.dataframe(pd.DataFrame(table), use_container_width=True, hide_index=True)


# ============================================================================
# RUN APP
# ============================================================================

if __name__ == "__main__":
    main()
