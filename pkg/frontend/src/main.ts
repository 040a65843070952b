// Application wiring: load form, the two graph panes (full and reduced),
// measure readouts, recommendation table, trajectory chart and undo.

import { Answer, ApiClient, GraphFormat, ServiceError } from "./api";
import { renderGraph, renderLegend } from "./graphview";
import { renderMeasureValues, renderRecommendation, renderTrajectory } from "./panels";
import { SessionController } from "./session";

export interface AppHandles {
  controller: SessionController;
  root: HTMLElement;
  elements: {
    documentInput: HTMLTextAreaElement;
    formatSelect: HTMLSelectElement;
    measuresInput: HTMLInputElement;
    loadButton: HTMLButtonElement;
    undoButton: HTMLButtonElement;
    measureSelect: HTMLSelectElement;
    errorBox: HTMLElement;
    fullPane: HTMLElement;
    reducedPane: HTMLElement;
    measurePanel: HTMLElement;
    recommendationPanel: HTMLElement;
    trajectoryPanel: HTMLElement;
    answerDialog: HTMLElement;
  };
}

function element<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text) {
    node.textContent = text;
  }
  return node;
}

export function createApp(root: HTMLElement, baseUrl: string): AppHandles {
  const api = new ApiClient(baseUrl);
  const controller = new SessionController(api);

  root.classList.add("argmeter-app");
  const form = element("div", "load-form");
  const documentInput = element("textarea", "document-input");
  documentInput.rows = 8;
  documentInput.placeholder = "Paste a graph document here";
  const fileInput = element("input", "file-input");
  fileInput.type = "file";
  const formatSelect = element("select", "format-select");
  for (const fmt of ["tgf", "apx", "inst"]) {
    const option = element("option", undefined, fmt);
    option.value = fmt;
    formatSelect.appendChild(option);
  }
  const measuresInput = element("input", "measures-input");
  measuresInput.value = "in,cc";
  const loadButton = element("button", "load-button", "Load session");
  const errorBox = element("p", "error-box");
  form.append(documentInput, fileInput, formatSelect, measuresInput, loadButton, errorBox);

  const controls = element("div", "controls");
  const measureSelect = element("select", "measure-select");
  const undoButton = element("button", "undo-button", "Undo");
  undoButton.disabled = true;
  controls.append(measureSelect, undoButton);

  const legend = element("div", "legend");
  renderLegend(legend);

  const panes = element("div", "panes");
  const fullPane = element("div", "pane full-pane");
  const reducedPane = element("div", "pane reduced-pane");
  panes.append(fullPane, reducedPane);

  const measurePanel = element("div", "measure-panel");
  const recommendationPanel = element("div", "recommendation-panel");
  const trajectoryPanel = element("div", "trajectory-panel");
  const answerDialog = element("div", "answer-dialog");

  root.append(
    form,
    controls,
    legend,
    panes,
    measurePanel,
    recommendationPanel,
    trajectoryPanel,
    answerDialog,
  );

  const showError = (message: string) => {
    errorBox.textContent = message;
  };

  const act = async (action: () => Promise<void>) => {
    showError("");
    try {
      await action();
    } catch (error) {
      if (error instanceof ServiceError) {
        showError(`service: ${error.message}`);
      } else {
        showError(String(error));
      }
    }
  };

  const openAnswerDialog = (argument: string) => {
    answerDialog.replaceChildren();
    const caption = element("span", undefined, `Commit ${argument}:`);
    const answerIn = element("button", "answer-in", "in");
    const answerOut = element("button", "answer-out", "out");
    const cancel = element("button", "answer-cancel", "cancel");
    const commit = (answer: Answer) => () =>
      act(async () => {
        answerDialog.replaceChildren();
        await controller.answer(argument, answer);
      });
    answerIn.addEventListener("click", commit("in"));
    answerOut.addEventListener("click", commit("out"));
    cancel.addEventListener("click", () => answerDialog.replaceChildren());
    answerDialog.append(caption, answerIn, answerOut, cancel);
  };

  controller.subscribe(() => {
    const state = controller.current;
    if (!state) {
      return;
    }
    const recommendation = controller.currentRecommendation;
    renderGraph(fullPane, state.graph, state.labelling, {
      onNodeClick: openAnswerDialog,
      clickableWhen: (name) => controller.isUndecided(name),
      highlight: recommendation?.argument ?? null,
    });
    // the reduced pane is what the measures describe: out arguments struck
    const reducedLabels = Object.fromEntries(
      state.reduced_graph.nodes.map((name) => [name, state.labelling[name]]),
    );
    renderGraph(reducedPane, state.reduced_graph, reducedLabels, {
      highlight: recommendation?.argument ?? null,
    });
    renderMeasureValues(measurePanel, state);
    renderRecommendation(recommendationPanel, recommendation);
    renderTrajectory(trajectoryPanel, state);
    undoButton.disabled = state.history.length === 0;
    if (measureSelect.children.length !== controller.measures.length) {
      measureSelect.replaceChildren();
      for (const name of controller.measures) {
        const option = element("option", undefined, name);
        option.value = name;
        measureSelect.appendChild(option);
      }
    }
    if (controller.selectedMeasure) {
      measureSelect.value = controller.selectedMeasure;
    }
  });

  loadButton.addEventListener("click", () =>
    act(async () => {
      const text = documentInput.value;
      if (!text.trim()) {
        throw new Error("paste or upload a graph document first");
      }
      const measures = measuresInput.value
        .split(",")
        .map((name) => name.trim())
        .filter(Boolean);
      await controller.load(text, formatSelect.value as GraphFormat, measures);
    }),
  );

  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (!file) {
      return;
    }
    file.text().then((text) => {
      documentInput.value = text;
      if (file.name.endsWith(".apx")) {
        formatSelect.value = "apx";
      } else if (file.name.endsWith(".inst")) {
        formatSelect.value = "inst";
      } else {
        formatSelect.value = "tgf";
      }
    });
  });

  undoButton.addEventListener("click", () => act(() => controller.undo()));
  measureSelect.addEventListener("change", () =>
    act(() => controller.selectMeasure(measureSelect.value)),
  );

  return {
    controller,
    root,
    elements: {
      documentInput,
      formatSelect,
      measuresInput,
      loadButton,
      undoButton,
      measureSelect,
      errorBox,
      fullPane,
      reducedPane,
      measurePanel,
      recommendationPanel,
      trajectoryPanel,
      answerDialog,
    },
  };
}

declare global {
  interface Window {
    ARGMETER_BASE_URL?: string;
  }
}

const mount = typeof document !== "undefined" ? document.getElementById("app") : null;
if (mount) {
  createApp(mount, window.ARGMETER_BASE_URL ?? "");
}
