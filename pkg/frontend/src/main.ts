import { api } from "./api.js";
import { App } from "./app.js";

function sessionHandle(): string {
  const stored = window.localStorage.getItem("worklens-handle");
  if (stored) return stored;
  const handle = window.prompt("Pick a handle to use in this workspace:") || `worker-${Date.now()}`;
  window.localStorage.setItem("worklens-handle", handle);
  return handle;
}

const root = document.getElementById("app");
if (root) {
  const app = new App(root, api, { sessionHandle: sessionHandle() });
  void app.start();
}
