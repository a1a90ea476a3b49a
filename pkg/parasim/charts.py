"""
Charts
======
Plotly figures for the dashboard. Values are converted to float only here.
"""

import plotly.express as px
import plotly.graph_objects as go

from parasim.hierarchy import SuperCategoryPartition
from parasim.render import format_fraction, matrix_values_frame
from parasim.similarity import SimilarityMatrix


def matrix_heatmap(matrix: SimilarityMatrix, theta=None) -> go.Figure:
    """S* heatmap on the fixed [-1, 1] scale; hover shows the exact fraction."""
    frame = matrix_values_frame(matrix)
    exact = [[format_fraction(cell.s_star) for cell in row] for row in matrix.cells]

    fig = go.Figure(go.Heatmap(
        z=frame.values,
        x=list(frame.columns),
        y=list(frame.index),
        zmin=-1,
        zmax=1,
        colorscale='RdBu',
        customdata=exact,
        hovertemplate='S*(%{y}, %{x}) = %{customdata}<extra></extra>',
    ))
    title = 'S* matrix' if theta is None else f'S* matrix (theta = {format_fraction(theta)})'
    fig.update_layout(title=title, margin=dict(l=20, r=20, t=40, b=20),
                      yaxis=dict(autorange='reversed'))
    return fig


def block_sizes_bar(partition: SuperCategoryPartition) -> go.Figure:
    labels = ['{' + ','.join(block) + '}' for block in partition.blocks]
    fig = px.bar(x=labels, y=[len(block) for block in partition.blocks],
                 labels={'x': 'super-category', 'y': 'entities'},
                 color_discrete_sequence=px.colors.qualitative.Set2)
    fig.update_layout(margin=dict(l=20, r=20, t=30, b=20))
    return fig


def compare_bar(rows) -> go.Figure:
    """Grouped bars of S* and Jaccard per pair; rows: dicts with pair, measure, value."""
    fig = px.bar(rows, x='pair', y='value', color='measure', barmode='group',
                 color_discrete_sequence=px.colors.qualitative.Bold)
    fig.update_layout(yaxis=dict(range=[-1, 1]), margin=dict(l=20, r=20, t=30, b=20))
    return fig
