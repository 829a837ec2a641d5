import streamlit as st

st.set_page_config(layout="wide")

st.title("Local Boxicity Explorer")
st.write("This application computes and certifies local box representations of graphs.")
st.write("A graph is d-local if every vertex can be given a box that is bounded in at most d dimensions, "
         "two boxes intersecting exactly when the vertices are adjacent.")
st.write("Use the navigation menu to choose a section:")
st.markdown("""
- **Exact values**: Upload a small graph and compute its local boxicity, boxicity or chromatic number, with a verified certificate.
- **Constructions**: Build representations (shift graphs, complements of regular girth-5 graphs, random graphs, degree and edge drivers, trees) and check them.
- **Multicyclic components (Monte Carlo)**: Estimate how often a sparse random graph has a component with two cycles, next to the theoretical bound.
- **Bounds table**: Evaluate the counting bounds and lower bounds for given parameters.
            """)
st.write("Every representation shown on these pages has been re-verified against its graph.")
