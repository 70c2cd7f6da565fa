import { SessionApi } from "./api";
import { App } from "./app";

const base = (window as { HETCONV_API?: string }).HETCONV_API ?? "";

const root = document.getElementById("app");
if (root) {
  const app = new App(new SessionApi(base), root);
  void app.start();
}
