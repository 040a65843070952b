// End-to-end walkthrough against a live service process: load the five-node
// demo graph, follow the recommendation, answer it, watch the reduced pane
// collapse and the trajectory drop, then undo back to the first frame.

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { createApp, AppHandles } from "../src/main";

const PORT = 8931;
const BASE_URL = `http://127.0.0.1:${PORT}`;

const DEMO_TGF = ["A1", "A2", "A3", "A4", "A5", "#",
  "A1 A3", "A2 A5", "A3 A2", "A3 A4", "A4 A1", "A5 A3", ""].join("\n");

const DEMO_APX = [
  "arg(A4).", "arg(A5).", "att(A4,A5).", "att(A5,A4).", "",
].join("\n");

let service: ChildProcess;

async function waitForService(): Promise<void> {
  const deadline = Date.now() + 30000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE_URL}/sessions/none`);
      if (response.status === 404) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("service did not come up");
}

function idle(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 25));
}

async function untilSettled(action: Promise<unknown>): Promise<void> {
  await action;
  await idle();
}

beforeAll(async () => {
  service = spawn(
    "python3",
    [
      "-c",
      "from argmeter.service import create_app, run_server; " +
        `run_server(create_app(), host='127.0.0.1', port=${PORT})`,
    ],
    { stdio: "ignore" },
  );
  await waitForService();
});

afterAll(() => {
  service.kill();
});

function loadApp(): AppHandles {
  document.body.replaceChildren();
  const root = document.createElement("div");
  document.body.appendChild(root);
  return createApp(root, BASE_URL);
}

async function loadDemoSession(app: AppHandles): Promise<void> {
  app.elements.documentInput.value = DEMO_TGF;
  app.elements.measuresInput.value = "in,cc";
  await untilSettled(
    app.controller.load(DEMO_TGF, "tgf", ["in", "cc"]),
  );
}

describe("resolution walkthrough", () => {
  it("loads the demo graph with every argument undecided", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    expect(app.elements.fullPane.querySelectorAll("g.node")).toHaveLength(5);
    expect(app.elements.fullPane.querySelectorAll("path.arc")).toHaveLength(6);
    expect(app.elements.fullPane.querySelectorAll("g.node-undec")).toHaveLength(5);
    const inValue = app.elements.measurePanel.querySelector("dd[data-measure='in']");
    expect(inValue?.textContent).toContain("6");
  });

  it("highlights the recommended argument under the indegree measure", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    const headline = app.elements.recommendationPanel.querySelector(
      ".recommendation-headline",
    ) as HTMLElement;
    expect(headline.dataset.argument).toBe("A3");
    const highlighted = app.elements.fullPane.querySelector("g.node-recommended text");
    expect(highlighted?.textContent).toBe("A3");
    const rows = app.elements.recommendationPanel.querySelectorAll("tr[data-argument]");
    expect(rows).toHaveLength(5);
  });

  it("collapses the reduced pane and drops the trajectory when A3 goes in", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    await untilSettled(app.controller.answer("A3", "in"));

    const reducedNodes = app.elements.reducedPane.querySelectorAll("g.node");
    expect(reducedNodes).toHaveLength(1);
    expect(reducedNodes[0].querySelector("text")?.textContent).toBe("A3");
    expect(app.elements.reducedPane.querySelectorAll("path.arc")).toHaveLength(0);

    const series = app.elements.trajectoryPanel.querySelectorAll(
      "text.trajectory-value[data-measure='in']",
    );
    const values = Array.from(series).map((node) => node.textContent);
    expect(values).toEqual(["6", "0"]);

    // the full pane keeps all five nodes, four struck out
    expect(app.elements.fullPane.querySelectorAll("g.node")).toHaveLength(5);
    expect(app.elements.fullPane.querySelectorAll("g.node-out")).toHaveLength(4);
    expect(app.elements.recommendationPanel.textContent).toContain("nothing is undecided");
  });

  it("restores the prior frame on undo", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    await untilSettled(app.controller.answer("A3", "in"));
    await untilSettled(app.controller.undo());

    expect(app.elements.fullPane.querySelectorAll("g.node-undec")).toHaveLength(5);
    expect(app.elements.reducedPane.querySelectorAll("g.node")).toHaveLength(5);
    const series = app.elements.trajectoryPanel.querySelectorAll(
      "text.trajectory-value[data-measure='in']",
    );
    expect(Array.from(series).map((node) => node.textContent)).toEqual(["6"]);
    expect(app.elements.undoButton.disabled).toBe(true);
  });

  it("answers through the node-click dialog", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    const node = Array.from(
      app.elements.fullPane.querySelectorAll("g.node-clickable"),
    ).find((group) => group.querySelector("text")?.textContent === "A3") as SVGGElement;
    node.dispatchEvent(new window.Event("click"));
    const inButton = app.elements.answerDialog.querySelector(
      "button.answer-in",
    ) as HTMLButtonElement;
    expect(inButton).not.toBeNull();
    inButton.click();
    await new Promise((resolve) => setTimeout(resolve, 400));
    expect(app.elements.reducedPane.querySelectorAll("g.node")).toHaveLength(1);
  });

  it("re-ranks instantly when the measure selector changes", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    await untilSettled(app.controller.selectMeasure("cc"));
    const headline = app.elements.recommendationPanel.querySelector(
      ".recommendation-headline",
    ) as HTMLElement;
    expect(headline.dataset.argument).toBe("A3");
    expect(headline.textContent).toContain("cc");
  });

  it("accepts apx documents too", async () => {
    const app = loadApp();
    await untilSettled(app.controller.load(DEMO_APX, "apx", ["in"]));
    expect(app.elements.fullPane.querySelectorAll("g.node")).toHaveLength(2);
  });

  it("surfaces service rejections inline", async () => {
    const app = loadApp();
    app.elements.documentInput.value = "1\n#\n1 2\n";
    app.elements.loadButton.click();
    await new Promise((resolve) => setTimeout(resolve, 400));
    expect(app.elements.errorBox.textContent).toContain("service:");
  });

  it("rejects empty input before talking to the service", async () => {
    const app = loadApp();
    app.elements.documentInput.value = "   ";
    app.elements.loadButton.click();
    await idle();
    expect(app.elements.errorBox.textContent).toContain("graph document");
  });

  it("disables committed nodes", async () => {
    const app = loadApp();
    await loadDemoSession(app);
    await untilSettled(app.controller.answer("A1", "out"));
    const disabled = Array.from(
      app.elements.fullPane.querySelectorAll("g.node-disabled text"),
    ).map((node) => node.textContent);
    expect(disabled).toContain("A1");
  });
});
