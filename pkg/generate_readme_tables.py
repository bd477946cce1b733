import catcluster.catcluster_graph_factory as graph_factory
import catcluster.catcluster_model_factory as model_factory
import catcluster.catcluster_sweep_factory as sweep_factory


def generate_sweeps_table():
    associated_graphs = sweep_factory.CatClusterSweep.display_all_associated_graphs()
    table = "| Command | Description | Accepted Graphs |\n|---------|-------------|-----------------|\n"
    for command, description in sweep_factory.AVAILABLE_SWEEPS.items():
        table += f"| {command} | {description} | {'<br>'.join(associated_graphs[command])} |\n"
    return table


def generate_graphs_table():
    table = "| Graph Option | Description | Display Name | Qubits | Center |\n|---|---|---|---|---|\n"
    for name, data in graph_factory.AVAILABLE_GRAPHS.items():
        graph = graph_factory.preset_graph(name)
        center = "N/A" if graph.center is None else graph.center
        table += f"| {name} | {data['description']} | {data['display_name']} | {graph.vertex_count} | {center} |\n"
    return table


def generate_models_table():
    table = "| Model Option | Display Name | ER_comp only | ER_loss only |\n|---|---|---|---|\n"
    for name, data in model_factory.AVAILABLE_MODELS.items():
        table += f"| {name} | {data['display_name']} | {data['comp_only']:.2%} | {data['loss_only']:.1%} |\n"
    return table


def main():
    print("## Commands\n")
    print(generate_sweeps_table())
    print("\n## Preset Graphs\n")
    print(generate_graphs_table())
    print("\n## Threshold Models\n")
    print(generate_models_table())


if __name__ == "__main__":
    main()
