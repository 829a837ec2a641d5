import streamlit as st
from page_tools import add_message, excel_button, start_console
from localbox.constructions.gnp import monte_carlo_frame, multicyclic_grid

# -------------------------------MAIN PROGRAM-------------------------------------

st.set_page_config(layout="wide")

st.title("Multicyclic components in sparse random graphs")
st.write("For G(n, c/n) with c < 1, the probability of a component with two or more cycles "
         "is at most 2 / ((1 - c)^3 n). The table compares it with observed frequencies.")

ns = st.multiselect("Vertices n", [50, 100, 200, 400, 800], default=[100, 200, 400])
cs = st.multiselect("c", [0.1, 0.3, 0.5, 0.7, 0.9], default=[0.3, 0.5, 0.7])
trials = st.number_input("Trials per cell", min_value=10, max_value=20000, value=2000)
seed = st.number_input("Seed", min_value=0, value=0)

if st.button("Run"):
    st.write("Progress")
    start_console()
    frame = monte_carlo_frame(multicyclic_grid(ns, cs, trials, seed=seed, message=add_message))
    frame["within 3 sigma"] = frame["empirical"] <= frame["bound"] + 3 * frame["sigma"]
    st.dataframe(frame, use_container_width=True)
    excel_button(frame, "multicyclic.xlsx")
