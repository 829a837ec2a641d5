import pandas as pd
import streamlit as st
from page_tools import add_message, start_console
from localbox.boxes.boxrep import representation_to_text, verify
from localbox.coloring.shift_graphs import shift_complement_rep, shift_graph
from localbox.constructions.compose import lbox_by_degree, lbox_by_edges
from localbox.constructions.girth5 import gcreg_value
from localbox.constructions.gnp import gnp_rep, sample_gnp
from localbox.errors import LocalBoxError
from localbox.graphs.graph_core import complement, parse_graph
from localbox.graphs.interval_algs import tree_two_box

# -----------------------------FUNCTIONS-----------------------------

def uploaded_graph(label: str):
    """
    Reads a graph from a Streamlit file uploader, stopping the page on errors.

    Args:
        label (str): Label of the uploader widget.

    Returns:
        Graph | None: The parsed graph, or None while nothing is uploaded.
    """
    uploaded = st.file_uploader(label)
    if uploaded is None:
        return None
    try:
        fmt = "graph6" if uploaded.name.endswith(".g6") else "edgelist"
        return parse_graph(uploaded.getvalue(), fmt)
    except LocalBoxError as err:
        st.error(f"The file could not be read: {err}")
        st.stop()


def show_result(R, G, claimed: int) -> None:
    """Verifies R against G at the claimed locality and shows the outcome."""
    report = verify(R, G, claimed)
    if report.ok:
        st.success(f"Verified: every box is local in at most {claimed} dimensions "
                   f"(maximum {report.max_locality}, {R.dims} dimensions in total)")
    else:
        st.error(f"Verification failed: {report.first_violation}")
    localities = pd.Series(R.localities()).value_counts().sort_index()
    st.dataframe(pd.DataFrame({"locality": localities.index, "vertices": localities.values}))
    st.download_button(label="📥 Download representation",
                       data=representation_to_text(R),
                       file_name="representation.rep")


# -------------------------------MAIN PROGRAM-------------------------------------

st.set_page_config(layout="wide")

st.title("Constructions")

kind = st.selectbox("Construction", ["Shift graph complement", "Complement of a regular girth-5 graph",
                                     "Sparse random graph", "Degree driver", "Edge driver", "Tree in two boxes"])

try:
    if kind == "Shift graph complement":
        n = st.number_input("n", min_value=2, max_value=30, value=5)
        if st.button("Build"):
            show_result(shift_complement_rep(n), complement(shift_graph(n)), 2)

    elif kind == "Sparse random graph":
        n = st.number_input("Vertices", min_value=2, max_value=1000, value=300)
        np_value = st.number_input("Expected degree np", min_value=0.1, value=2.0)
        eps = st.number_input("epsilon", min_value=0.01, value=0.5)
        seed = st.number_input("Seed", min_value=0, value=3)
        if st.button("Build"):
            start_console()
            G = sample_gnp(n, min(1.0, np_value / n), seed).graph
            result = gnp_rep(G, np_value, eps, seed=seed, message=add_message)
            if result.success:
                show_result(result.representation, G, result.bound)
            else:
                st.warning(f"No valid partition after {result.attempts} attempts "
                           f"(classes {result.offending_pair} span a multicyclic component)")

    else:
        G = uploaded_graph("Upload a graph (edge list, or graph6 with suffix .g6)")
        if G is None:
            st.stop()
        st.write(f"Graph with {G.n} vertices and {G.m} edges")
        if kind in ("Degree driver", "Edge driver"):
            q = st.number_input("Order q of the affine plane (prime)", min_value=2, value=2)
            seed = st.number_input("Seed", min_value=0, value=0)
        if st.button("Build"):
            start_console()
            if kind == "Complement of a regular girth-5 graph":
                result = gcreg_value(G, add_message)
                st.write(f"Local boxicity {result.value}. Lower bound: {result.lower_witness}")
                show_result(result.upper, G, result.value)
            elif kind in ("Degree driver", "Edge driver"):
                driver = lbox_by_degree if kind == "Degree driver" else lbox_by_edges
                result = driver(G, q_override=q, seed=seed, message=add_message)
                st.code("\n".join(result.strategy_log))
                show_result(result.representation, G, result.locality)
            else:
                show_result(tree_two_box(G), G, 2)
except LocalBoxError as err:
    st.error(str(err))
