import networkx as nx
import pandas as pd
import streamlit as st
from page_tools import add_message, excel_button, start_console
from localbox.boxes.boxrep import representation_to_text
from localbox.errors import LocalBoxError
from localbox.graphs.graph_core import Graph, complement, parse_graph
from localbox.solvers.exact_solver import box_exact, chromatic_exact, lbox_exact

# -----------------------------FUNCTIONS-----------------------------

def example_graphs() -> dict:
    """
    Small graphs whose values are known, offered when no file is uploaded.

    Returns:
        dict: Name of the example mapped to its Graph.
    """
    petersen = Graph.from_networkx(nx.petersen_graph())
    k6_minus_pm = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3])
    return {"C4": Graph.from_networkx(nx.cycle_graph(4)),
            "C5": Graph.from_networkx(nx.cycle_graph(5)),
            "Complement of the Petersen graph": complement(petersen),
            "K6 minus a perfect matching": k6_minus_pm}


def boxes_table(R) -> pd.DataFrame:
    """One row per vertex with its bounded dimensions and intervals."""
    rows = [{"vertex": v, "locality": box.locality,
             "intervals": "; ".join(f"dim {dim}: {iv}" for dim, iv in box.bounded)}
            for v, box in enumerate(R.boxes)]
    return pd.DataFrame(rows)


# -------------------------------MAIN PROGRAM-------------------------------------

st.set_page_config(layout="wide")

st.title("Exact values")
st.write("Exact solvers are meant for small graphs (up to about eight vertices).")

uploaded = st.file_uploader("Upload a graph (edge list, or graph6 with suffix .g6)")
if uploaded is not None:
    try:
        fmt = "graph6" if uploaded.name.endswith(".g6") else "edgelist"
        G = parse_graph(uploaded.getvalue(), fmt)
    except LocalBoxError as err:
        st.error(f"The file could not be read: {err}")
        st.stop()
else:
    examples = example_graphs()
    name = st.selectbox("Or choose an example", list(examples))
    G = examples[name]

st.write(f"Graph with {G.n} vertices and {G.m} edges")
quantity = st.radio("Quantity", ["local boxicity", "boxicity", "chromatic number"], horizontal=True)
budget = st.number_input("Time budget (s)", min_value=1, value=60)

if st.button("Compute"):
    st.write("Solver progress")
    start_console()
    if quantity == "chromatic number":
        result = chromatic_exact(G, time_budget=budget, message=add_message)
        if result.status == "exact":
            st.success(f"Chromatic number: {result.value}")
        else:
            st.warning(f"Unknown, between {result.lower_bound} and {result.upper_bound}")
        colors = pd.DataFrame({"vertex": range(G.n), "color": result.colors})
        st.dataframe(colors, use_container_width=True)
        excel_button(colors, "coloring.xlsx")
    else:
        solver = lbox_exact if quantity == "local boxicity" else box_exact
        result = solver(G, time_budget=budget, message=add_message)
        if result.exact:
            st.success(f"{quantity.capitalize()}: {result.value}")
        else:
            st.warning(f"Unknown, between {result.lower_bound} and {result.upper_bound}")
        st.write(f"Lower bound: {result.lower_bound_witness}")
        if result.certificate is not None:
            table = boxes_table(result.certificate)
            st.dataframe(table, use_container_width=True)
            st.download_button(label="📥 Download certificate",
                               data=representation_to_text(result.certificate),
                               file_name="certificate.rep")
