import streamlit as st
from page_tools import excel_button
from localbox.bounds.counting_bounds import (bounds_frame, counting_upper, lll_partition_report,
                                             lower_bound_table, prior_degree_bound, regular_graph_count_log2)
from localbox.errors import LocalBoxError

# -------------------------------MAIN PROGRAM-------------------------------------

st.set_page_config(layout="wide")

st.title("Bounds table")
st.write("Logarithms are binary. Bounds known only up to a constant are listed without a value.")

col1, col2, col3 = st.columns(3)
n = col1.number_input("n (vertices)", min_value=2, value=1024)
d = col1.number_input("d (locality)", min_value=2, value=2)
max_degree = col2.number_input("D (maximum degree)", min_value=2, value=42)
eps = col2.number_input("epsilon", min_value=0.01, max_value=0.99, value=0.5)
np_value = col3.number_input("np", min_value=0.1, value=100.0)
m = col3.number_input("m (edges)", min_value=2, value=10000)
q = col3.number_input("q (affine plane order)", min_value=2, value=2)

try:
    reports = [counting_upper(n, d)]
    reports += lower_bound_table(n=n, max_degree=max_degree, eps=eps, np_value=np_value, m=m, g=m)
    reports.append(prior_degree_bound(max_degree))
    if max_degree <= n - 2:
        reports.append(regular_graph_count_log2(n, max_degree))
    frame = bounds_frame(reports)
    st.dataframe(frame, use_container_width=True)
    excel_button(frame, "bounds.xlsx")

    lll = lll_partition_report(max_degree, q)
    st.markdown("### Local lemma check for the balanced partition")
    st.write(f"event bound {lll.event_bound:.3e}, dependency {lll.dependency}, "
             f"requirement 1/(4d) = {lll.requirement:.3e}: {'satisfied' if lll.satisfied else 'not satisfied'}")
    for note in lll.notes:
        st.warning(note)
except LocalBoxError as err:
    st.error(str(err))
